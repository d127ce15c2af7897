#include "clusterbench/bench.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "clusterbench/checksum.hpp"
#include "clusterbench/util.hpp"

namespace clusterbench {

namespace {

// Stream labels per cluster count: even for the hard run, odd for the fuzzy
// run, so the two algorithms never share draws.
std::uint64_t kmeans_stream_label(std::size_t clusters) { return 2 * static_cast<std::uint64_t>(clusters); }
std::uint64_t fcm_stream_label(std::size_t clusters) { return 2 * static_cast<std::uint64_t>(clusters) + 1; }

double median(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t mid = values.size() / 2;
    if (values.size() % 2 == 1) return values[mid];
    return 0.5 * (values[mid - 1] + values[mid]);
}

void validate_config(const BenchConfig& config, const LabeledDataset& ds) {
    if (config.cluster_counts.empty()) throw std::invalid_argument("bench: cluster_counts must be nonempty");
    if (config.timing_repeats < 1) throw std::invalid_argument("bench: timing_repeats must be at least 1");
    if (config.replicates < 1) throw std::invalid_argument("bench: replicates must be at least 1");
    for (std::size_t c : config.cluster_counts)
        if (c < 1 || c > ds.data.rows) throw std::invalid_argument("bench: cluster count out of range for dataset");
}

const char* criterion_name(TerminationCriterion criterion) {
    return criterion == TerminationCriterion::membership_delta ? "membership_delta" : "objective_improvement";
}

std::string feature_name(const LabeledDataset& ds, std::size_t j) {
    if (ds.feature_names) return (*ds.feature_names)[j];
    return "f" + std::to_string(j);
}

class PlotFile {
public:
    PlotFile(const std::filesystem::path& path) : path_(path), out_(path) {
        if (!out_) throw std::runtime_error("emit_plot_data: cannot open " + path.string());
    }

    std::ostream& stream() { return out_; }

    void close() {
        out_.flush();
        if (!out_) throw std::runtime_error("emit_plot_data: write error on " + path_.string());
        out_.close();
    }

private:
    std::filesystem::path path_;
    std::ofstream out_;
};

}  // namespace

ComparisonResults run_comparison(const LabeledDataset& ds, const BenchConfig& config,
                                 const DatasetSummary& source_info) {
    validate_config(config, ds);

    ComparisonResults results;
    BenchReport& report = results.report;
    report.config = config;
    report.dataset.n = ds.data.rows;
    report.dataset.d = ds.data.cols;
    report.dataset.source = source_info.source.empty() ? "<memory>" : source_info.source;
    report.dataset.checksum = source_info.checksum.empty() ? sha256_hex(to_csv(ds)) : source_info.checksum;

    const RandomStream base(config.seed);

    for (const std::size_t clusters : config.cluster_counts) {
        // Hard clustering entry: replicated restarts, sequential timing
        // repeats of the identical seeded run.
        {
            const KMeansConfig kconfig{clusters, 100, config.replicates};
            const RandomStream stream = base.derive(kmeans_stream_label(clusters));
            std::optional<ReplicatedOutcome> outcome;
            std::vector<double> times;
            times.reserve(config.timing_repeats);
            for (std::size_t rep = 0; rep < config.timing_repeats; ++rep) {
                auto [run, seconds] = time_run([&] { return run_kmeans_replicated(ds.data, kconfig, stream); });
                times.push_back(seconds);
                if (!outcome) outcome = std::move(run);
            }
            BenchEntry entry;
            entry.algorithm = "kmeans";
            entry.clusters = clusters;
            entry.elapsed_seconds = median(times);
            entry.iterations = outcome->best.iterations;
            entry.objective = outcome->best.total_sumd;
            entry.converged = outcome->best.converged;
            for (const KMeansResult& r : outcome->all)
                entry.replicate_detail.push_back({r.replicate_index, r.iterations, r.total_sumd, r.converged});
            report.entries.push_back(std::move(entry));
            results.kmeans_runs.push_back(std::move(outcome));
        }

        // Fuzzy entry; below two clusters there is nothing to run.
        if (clusters >= 2) {
            const FcmConfig fconfig{clusters, config.m, config.epsilon, config.max_iterations, config.criterion};
            const RandomStream stream = base.derive(fcm_stream_label(clusters));
            std::optional<FcmResult> outcome;
            std::vector<double> times;
            times.reserve(config.timing_repeats);
            for (std::size_t rep = 0; rep < config.timing_repeats; ++rep) {
                auto [run, seconds] = time_run([&] { return run_fcm(ds.data, fconfig, stream); });
                times.push_back(seconds);
                if (!outcome) outcome = std::move(run);
            }
            BenchEntry entry;
            entry.algorithm = "fcm";
            entry.clusters = clusters;
            entry.elapsed_seconds = median(times);
            entry.iterations = outcome->iterations;
            entry.objective = outcome->objective_history.back();
            entry.converged = outcome->converged;
            report.entries.push_back(std::move(entry));

            const ComplexityInputs observed{static_cast<std::int64_t>(ds.data.rows),
                                            static_cast<std::int64_t>(clusters),
                                            static_cast<std::int64_t>(ds.data.cols),
                                            static_cast<std::int64_t>(outcome->iterations)};
            report.complexity_observed.push_back(
                {outcome->iterations,
                 {report.complexity_observed.size() + 1, observed.c, kmeans_op_count(observed), fcm_op_count(observed)}});
            results.fcm_runs.push_back(std::move(outcome));
        } else {
            BenchEntry entry;
            entry.algorithm = "fcm";
            entry.clusters = clusters;
            entry.skipped = true;
            entry.skip_reason = "FCM requires at least two clusters";
            report.entries.push_back(std::move(entry));
            results.fcm_runs.push_back(std::nullopt);
        }
    }

    std::vector<std::int64_t> c_values;
    c_values.reserve(config.cluster_counts.size());
    for (std::size_t c : config.cluster_counts) c_values.push_back(static_cast<std::int64_t>(c));
    report.complexity_fixed = complexity_table(static_cast<std::int64_t>(ds.data.rows),
                                               static_cast<std::int64_t>(ds.data.cols),
                                               config.fixed_iterations, c_values);
    return results;
}

std::vector<std::filesystem::path> emit_plot_data(const ComparisonResults& results, const LabeledDataset& ds,
                                                  const std::filesystem::path& destination) {
    const BenchReport& report = results.report;
    const bool any_runs = std::any_of(results.kmeans_runs.begin(), results.kmeans_runs.end(),
                                      [](const auto& r) { return r.has_value(); }) ||
                          std::any_of(results.fcm_runs.begin(), results.fcm_runs.end(),
                                      [](const auto& r) { return r.has_value(); });
    if (!any_runs) throw std::runtime_error("emit_plot_data: nothing to emit");
    if (results.kmeans_runs.size() != report.config.cluster_counts.size() ||
        results.fcm_runs.size() != report.config.cluster_counts.size())
        throw std::invalid_argument("emit_plot_data: results do not match the report's cluster counts");

    std::filesystem::create_directories(destination);
    std::vector<std::filesystem::path> written;

    const std::size_t d = ds.data.cols;
    for (std::size_t idx = 0; idx < report.config.cluster_counts.size(); ++idx) {
        const std::size_t clusters = report.config.cluster_counts[idx];
        const std::string suffix = "_c" + std::to_string(clusters) + ".csv";

        if (results.kmeans_runs[idx]) {
            PlotFile file(destination / ("kmeans_labels" + suffix));
            for (std::size_t j = 0; j < d; ++j) file.stream() << feature_name(ds, j) << ',';
            file.stream() << "cluster\n";
            const KMeansResult& best = results.kmeans_runs[idx]->best;
            for (std::size_t i = 0; i < ds.data.rows; ++i) {
                for (std::size_t j = 0; j < d; ++j) file.stream() << format_double(ds.data.at(i, j)) << ',';
                file.stream() << best.assignment.labels[i] << '\n';
            }
            file.close();
            written.push_back(destination / ("kmeans_labels" + suffix));
        }

        if (results.fcm_runs[idx]) {
            const FcmResult& run = *results.fcm_runs[idx];
            {
                PlotFile file(destination / ("fcm_membership" + suffix));
                for (std::size_t j = 0; j < d; ++j) file.stream() << feature_name(ds, j) << ',';
                for (std::size_t j = 0; j < clusters; ++j)
                    file.stream() << 'u' << j << (j + 1 < clusters ? "," : "\n");
                for (std::size_t i = 0; i < ds.data.rows; ++i) {
                    for (std::size_t j = 0; j < d; ++j) file.stream() << format_double(ds.data.at(i, j)) << ',';
                    for (std::size_t j = 0; j < clusters; ++j)
                        file.stream() << format_double(run.membership.at(i, j)) << (j + 1 < clusters ? "," : "\n");
                }
                file.close();
                written.push_back(destination / ("fcm_membership" + suffix));
            }
            {
                PlotFile file(destination / ("fcm_objective" + suffix));
                file.stream() << "iteration,objective\n";
                for (std::size_t it = 0; it < run.objective_history.size(); ++it)
                    file.stream() << (it + 1) << ',' << format_double(run.objective_history[it]) << '\n';
                file.close();
                written.push_back(destination / ("fcm_objective" + suffix));
            }
        }
    }

    {
        PlotFile file(destination / "timing.csv");
        file.stream() << "algorithm,clusters,elapsed_seconds,iterations,objective\n";
        for (const BenchEntry& entry : report.entries) {
            if (entry.skipped) continue;
            file.stream() << entry.algorithm << ',' << entry.clusters << ',' << format_double(entry.elapsed_seconds)
                          << ',' << entry.iterations << ',' << format_double(entry.objective) << '\n';
        }
        file.close();
        written.push_back(destination / "timing.csv");
    }

    {
        PlotFile file(destination / "complexity.csv");
        file.stream() << "set,experiment_index,clusters,iterations,kmeans_ops,fcm_ops\n";
        for (const ObservedComplexity& oc : report.complexity_observed)
            file.stream() << "observed," << oc.row.experiment_index << ',' << oc.row.clusters << ','
                          << oc.iterations_used << ',' << oc.row.kmeans_ops << ',' << oc.row.fcm_ops << '\n';
        for (const ComplexityRow& row : report.complexity_fixed)
            file.stream() << "fixed," << row.experiment_index << ',' << row.clusters << ','
                          << report.config.fixed_iterations << ',' << row.kmeans_ops << ',' << row.fcm_ops << '\n';
        file.close();
        written.push_back(destination / "complexity.csv");
    }

    return written;
}

std::string report_to_json(const BenchReport& report) {
    using nlohmann::json;
    json j;
    j["schema"] = report.schema;
    j["dataset"] = {{"n", report.dataset.n},
                    {"d", report.dataset.d},
                    {"source", report.dataset.source},
                    {"checksum", report.dataset.checksum}};
    j["config"] = {{"cluster_counts", report.config.cluster_counts},
                   {"replicates", report.config.replicates},
                   {"seed", report.config.seed},
                   {"m", report.config.m},
                   {"epsilon", report.config.epsilon},
                   {"max_iterations", report.config.max_iterations},
                   {"criterion", criterion_name(report.config.criterion)},
                   {"timing_repeats", report.config.timing_repeats},
                   {"fixed_iterations", report.config.fixed_iterations}};
    j["entries"] = json::array();
    for (const BenchEntry& entry : report.entries) {
        json e;
        e["algorithm"] = entry.algorithm;
        e["clusters"] = entry.clusters;
        if (entry.skipped) {
            e["skipped"] = true;
            e["skip_reason"] = entry.skip_reason;
        } else {
            e["skipped"] = false;
            e["elapsed_seconds"] = entry.elapsed_seconds;
            e["iterations"] = entry.iterations;
            e["objective"] = entry.objective;
            e["converged"] = entry.converged;
            if (!entry.replicate_detail.empty()) {
                e["replicates"] = json::array();
                for (const KMeansReplicateDetail& r : entry.replicate_detail)
                    e["replicates"].push_back({{"replicate", r.replicate_index},
                                               {"iterations", r.iterations},
                                               {"total_sumd", r.total_sumd},
                                               {"converged", r.converged}});
            }
        }
        j["entries"].push_back(std::move(e));
    }
    j["complexity"]["observed"] = json::array();
    for (const ObservedComplexity& oc : report.complexity_observed)
        j["complexity"]["observed"].push_back({{"experiment_index", oc.row.experiment_index},
                                               {"clusters", oc.row.clusters},
                                               {"iterations", oc.iterations_used},
                                               {"kmeans_ops", oc.row.kmeans_ops},
                                               {"fcm_ops", oc.row.fcm_ops}});
    j["complexity"]["fixed"] = json::array();
    for (const ComplexityRow& row : report.complexity_fixed)
        j["complexity"]["fixed"].push_back({{"experiment_index", row.experiment_index},
                                            {"clusters", row.clusters},
                                            {"iterations", report.config.fixed_iterations},
                                            {"kmeans_ops", row.kmeans_ops},
                                            {"fcm_ops", row.fcm_ops}});
    return j.dump(2) + "\n";
}

void write_report(const BenchReport& report, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_report: cannot open " + path.string());
    out << report_to_json(report);
    if (!out) throw std::runtime_error("write_report: write error on " + path.string());
}

}  // namespace clusterbench
