// clusterbench: hard k-means vs fuzzy c-means on one dataset; objectives,
// iteration counts, wall-clock medians, and an op-count growth model.

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "clusterbench/bench.hpp"
#include "clusterbench/checksum.hpp"
#include "clusterbench/complexity.hpp"
#include "clusterbench/datasets.hpp"
#include "clusterbench/fcm.hpp"
#include "clusterbench/ingest.hpp"
#include "clusterbench/kmeans.hpp"
#include "clusterbench/util.hpp"

namespace {

using namespace clusterbench;

constexpr std::uint64_t kDefaultSeed = 42;

struct InputOptions {
    std::string input;
    std::vector<std::size_t> features;
    std::optional<std::size_t> label_column;
};

void add_input_options(CLI::App* cmd, InputOptions& opts) {
    cmd->add_option("--input,-i", opts.input, "Input CSV file (numeric columns, optional class column)")
        ->default_val(default_iris_path().string());
    cmd->add_option("--features", opts.features,
                    "Comma-separated column indices to cluster on (default: all numeric columns)")
        ->delimiter(',');
}

LabeledDataset load_input(const InputOptions& opts, DatasetSummary* summary = nullptr) {
    LabeledDataset ds = load_csv_file(opts.input);
    if (summary != nullptr) {
        summary->source = opts.input;
        summary->checksum = sha256_file(opts.input);
    }
    if (!opts.features.empty()) ds = select_features(ds, opts.features);
    return ds;
}

std::string format_fixed(double value, int digits = 4) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.*f", digits, value);
    return buffer;
}

TerminationCriterion criterion_from_name(const std::string& name) {
    if (name == "membership_delta") return TerminationCriterion::membership_delta;
    if (name == "objective_improvement") return TerminationCriterion::objective_improvement;
    throw CLI::ValidationError("--criterion", "must be membership_delta or objective_improvement");
}

void write_text_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open " + out_path);
    out << text;
    if (!out) throw std::runtime_error("write error on " + out_path);
}

nlohmann::json centroids_to_json(const CentroidSet& centers) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t j = 0; j < centers.count; ++j) {
        nlohmann::json row = nlohmann::json::array();
        for (double v : centers.center(j)) row.push_back(v);
        rows.push_back(std::move(row));
    }
    return rows;
}

// ---- kmeans ----------------------------------------------------------------

struct KMeansCli {
    InputOptions input;
    std::size_t clusters = 0;
    std::size_t replicates = 1;
    std::size_t max_iterations = 100;
    std::uint64_t seed = kDefaultSeed;
    std::string format = "human";
    std::string out;
};

void run_kmeans_command(const KMeansCli& cli) {
    const LabeledDataset ds = load_input(cli.input);
    const KMeansConfig config{cli.clusters, cli.max_iterations, cli.replicates};
    const ReplicatedOutcome outcome = run_kmeans_replicated(ds.data, config, RandomStream(cli.seed));

    if (cli.format == "json") {
        nlohmann::json j;
        j["algorithm"] = "kmeans";
        j["clusters"] = cli.clusters;
        j["replicates"] = cli.replicates;
        j["seed"] = cli.seed;
        j["runs"] = nlohmann::json::array();
        for (const KMeansResult& r : outcome.all)
            j["runs"].push_back({{"replicate", r.replicate_index},
                                 {"iterations", r.iterations},
                                 {"total_sumd", r.total_sumd},
                                 {"converged", r.converged}});
        j["best"] = {{"replicate", outcome.best.replicate_index},
                     {"iterations", outcome.best.iterations},
                     {"total_sumd", outcome.best.total_sumd},
                     {"per_cluster_sumd", outcome.best.per_cluster_sumd},
                     {"converged", outcome.best.converged},
                     {"centroids", centroids_to_json(outcome.best.centroids)}};
        write_text_output(j.dump(2) + "\n", cli.out);
        return;
    }

    std::string text;
    for (const KMeansResult& r : outcome.all)
        text += "Replicate " + std::to_string(r.replicate_index + 1) + ", " + std::to_string(r.iterations) +
                " iterations, total sum of distances = " + format_fixed(r.total_sumd) + ".\n";
    text += "Best total sum of distances = " + format_fixed(outcome.best.total_sumd) + "\n";
    write_text_output(text, cli.out);
}

// ---- fcm -------------------------------------------------------------------

struct FcmCli {
    InputOptions input;
    std::size_t clusters = 0;
    double m = 2.0;
    double epsilon = 1e-6;
    std::size_t max_iterations = 100;
    std::string criterion = "membership_delta";
    std::uint64_t seed = kDefaultSeed;
    std::string format = "human";
    std::string out;
};

void run_fcm_command(const FcmCli& cli) {
    const LabeledDataset ds = load_input(cli.input);
    const FcmConfig config{cli.clusters, cli.m, cli.epsilon, cli.max_iterations, criterion_from_name(cli.criterion)};
    const FcmResult result = run_fcm(ds.data, config, RandomStream(cli.seed));

    if (cli.format == "json") {
        nlohmann::json j;
        j["algorithm"] = "fcm";
        j["clusters"] = cli.clusters;
        j["m"] = cli.m;
        j["epsilon"] = cli.epsilon;
        j["criterion"] = cli.criterion;
        j["seed"] = cli.seed;
        j["iterations"] = result.iterations;
        j["converged"] = result.converged;
        j["objective"] = result.objective_history.back();
        j["objective_history"] = result.objective_history;
        j["centers"] = centroids_to_json(result.centers);
        write_text_output(j.dump(2) + "\n", cli.out);
        return;
    }

    std::string text;
    for (std::size_t it = 0; it < result.objective_history.size(); ++it)
        text += "Iteration count = " + std::to_string(it + 1) +
                ", obj. fcn = " + format_fixed(result.objective_history[it], 6) + "\n";
    text += std::string(result.converged ? "Converged" : "Stopped") + " after " +
            std::to_string(result.iterations) + " iterations, objective = " +
            format_fixed(result.objective_history.back(), 6) + "\n";
    write_text_output(text, cli.out);
}

// ---- compare ---------------------------------------------------------------

struct CompareCli {
    InputOptions input;
    std::string clusters;
    std::size_t replicates = 5;
    double m = 2.0;
    double epsilon = 1e-6;
    std::size_t max_iterations = 100;
    std::string criterion = "membership_delta";
    std::size_t timing_repeats = 3;
    std::int64_t fixed_iterations = 28;
    std::uint64_t seed = kDefaultSeed;
    std::string format = "human";
    std::string out;
    std::string plot_dir;
};

void run_compare_command(const CompareCli& cli) {
    DatasetSummary source;
    const LabeledDataset ds = load_input(cli.input, &source);

    BenchConfig config;
    config.cluster_counts = parse_cluster_list(cli.clusters);
    config.replicates = cli.replicates;
    config.seed = cli.seed;
    config.m = cli.m;
    config.epsilon = cli.epsilon;
    config.max_iterations = cli.max_iterations;
    config.criterion = criterion_from_name(cli.criterion);
    config.timing_repeats = cli.timing_repeats;
    config.fixed_iterations = cli.fixed_iterations;

    const ComparisonResults results = run_comparison(ds, config, source);

    if (!cli.plot_dir.empty()) {
        const auto written = emit_plot_data(results, ds, cli.plot_dir);
        std::cerr << "wrote " << written.size() << " plot data files to " << cli.plot_dir << "\n";
    }

    if (!cli.out.empty()) write_report(results.report, cli.out);

    if (cli.format == "json") {
        if (cli.out.empty()) std::cout << report_to_json(results.report);
        return;
    }

    std::string text;
    text += "dataset: " + results.report.dataset.source + " (" + std::to_string(results.report.dataset.n) + " x " +
            std::to_string(results.report.dataset.d) + ", sha256:" + results.report.dataset.checksum.substr(0, 12) +
            "...)\n";
    text += "algorithm  clusters  elapsed_s   iterations  objective     converged\n";
    for (const BenchEntry& e : results.report.entries) {
        if (e.skipped) {
            text += "fcm        " + std::to_string(e.clusters) + "         skipped (" + e.skip_reason + ")\n";
            continue;
        }
        char line[160];
        std::snprintf(line, sizeof(line), "%-9s  %-8zu  %-10.6f  %-10zu  %-12.4f  %s\n", e.algorithm.c_str(),
                      e.clusters, e.elapsed_seconds, e.iterations, e.objective, e.converged ? "yes" : "no");
        text += line;
    }
    text += "op counts (fixed i=" + std::to_string(results.report.config.fixed_iterations) + "):\n";
    text += "exp  clusters  kmeans_ops  fcm_ops\n";
    for (const ComplexityRow& row : results.report.complexity_fixed) {
        char line[120];
        std::snprintf(line, sizeof(line), "%-3zu  %-8lld  %-10lld  %lld\n", row.experiment_index,
                      static_cast<long long>(row.clusters), static_cast<long long>(row.kmeans_ops),
                      static_cast<long long>(row.fcm_ops));
        text += line;
    }
    std::cout << text;
}

// ---- complexity ------------------------------------------------------------

struct ComplexityCli {
    std::int64_t n = 200;
    std::int64_t d = 4;
    std::int64_t i = 28;
    std::string clusters;
    std::string format = "human";
    std::string out;
};

void run_complexity_command(const ComplexityCli& cli) {
    std::vector<std::int64_t> c_values;
    for (std::size_t c : parse_cluster_list(cli.clusters)) c_values.push_back(static_cast<std::int64_t>(c));
    const auto rows = complexity_table(cli.n, cli.d, cli.i, c_values);

    if (cli.format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const ComplexityRow& row : rows)
            j.push_back({{"experiment_index", row.experiment_index},
                         {"clusters", row.clusters},
                         {"kmeans_ops", row.kmeans_ops},
                         {"fcm_ops", row.fcm_ops}});
        write_text_output(j.dump(2) + "\n", cli.out);
        return;
    }

    std::string text = "exp  clusters  kmeans_ops  fcm_ops\n";
    for (const ComplexityRow& row : rows) {
        char line[120];
        std::snprintf(line, sizeof(line), "%-3zu  %-8lld  %-10lld  %lld\n", row.experiment_index,
                      static_cast<long long>(row.clusters), static_cast<long long>(row.kmeans_ops),
                      static_cast<long long>(row.fcm_ops));
        text += line;
    }
    write_text_output(text, cli.out);
}

// ---- fetch-data ------------------------------------------------------------

struct FetchCli {
    std::string dir;
};

bool iris_checksum_ok(const std::filesystem::path& path) {
    return std::filesystem::exists(path) && sha256_file(path) == kIrisSha256;
}

void run_fetch_command(const FetchCli& cli) {
    const std::filesystem::path dir = cli.dir.empty() ? default_data_dir() : std::filesystem::path(cli.dir);
    const std::filesystem::path target = dir / kIrisFilename;

    if (iris_checksum_ok(target)) {
        std::cout << "ok: " << target.string() << " matches sha256:" << kIrisSha256 << "\n";
        return;
    }

    std::filesystem::create_directories(dir);
    const std::vector<std::pair<std::string, std::string>> sources = {
        {"archive.ics.uci.edu", "/ml/machine-learning-databases/iris/iris.data"},
        {"archive.ics.uci.edu", "/static/public/53/data/iris.data"},
    };
    for (const auto& [host, path] : sources) {
        httplib::SSLClient client(host);
        client.set_follow_location(true);
        client.set_connection_timeout(10);
        auto res = client.Get(path);
        if (!res || res->status != 200) continue;
        if (sha256_hex(res->body) != kIrisSha256) {
            std::cerr << "warning: checksum mismatch from https://" << host << path << "\n";
            continue;
        }
        std::ofstream out(target, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open " + target.string());
        out << res->body;
        if (!out) throw std::runtime_error("write error on " + target.string());
        std::cout << "ok: fetched " << target.string() << " (sha256:" << kIrisSha256 << ")\n";
        return;
    }
    throw std::runtime_error("could not fetch iris.data with the pinned checksum; try scripts/fetch_iris.sh");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"clusterbench: hard k-means vs fuzzy c-means comparison harness"};
    app.require_subcommand(1);

    KMeansCli kmeans_cli;
    CLI::App* kmeans_cmd = app.add_subcommand("kmeans", "Replicated hard k-means on a CSV dataset");
    add_input_options(kmeans_cmd, kmeans_cli.input);
    kmeans_cmd->add_option("--clusters,-k", kmeans_cli.clusters, "Number of clusters")->required();
    kmeans_cmd->add_option("--replicates", kmeans_cli.replicates, "Independent restarts; best objective wins")
        ->default_val(1);
    kmeans_cmd->add_option("--max-iter", kmeans_cli.max_iterations, "Assignment-pass limit")->default_val(100);
    kmeans_cmd->add_option("--seed", kmeans_cli.seed, "Random stream seed")->default_val(kDefaultSeed);
    kmeans_cmd->add_option("--format", kmeans_cli.format, "Output format")
        ->check(CLI::IsMember({"human", "json"}))
        ->default_val("human");
    kmeans_cmd->add_option("--out", kmeans_cli.out, "Write output to this file instead of stdout");
    kmeans_cmd->callback([&] { run_kmeans_command(kmeans_cli); });

    FcmCli fcm_cli;
    CLI::App* fcm_cmd = app.add_subcommand("fcm", "Fuzzy c-means on a CSV dataset");
    add_input_options(fcm_cmd, fcm_cli.input);
    fcm_cmd->add_option("--clusters,-c", fcm_cli.clusters, "Number of clusters (at least 2)")->required();
    fcm_cmd->add_option("--m", fcm_cli.m, "Fuzzifier exponent (> 1)")->default_val(2.0);
    fcm_cmd->add_option("--eps", fcm_cli.epsilon, "Termination threshold in (0, 1)")->default_val(1e-6);
    fcm_cmd->add_option("--max-iter", fcm_cli.max_iterations, "Iteration limit")->default_val(100);
    fcm_cmd->add_option("--criterion", fcm_cli.criterion, "Stop test")
        ->check(CLI::IsMember({"membership_delta", "objective_improvement"}))
        ->default_val("membership_delta");
    fcm_cmd->add_option("--seed", fcm_cli.seed, "Random stream seed")->default_val(kDefaultSeed);
    fcm_cmd->add_option("--format", fcm_cli.format, "Output format")
        ->check(CLI::IsMember({"human", "json"}))
        ->default_val("human");
    fcm_cmd->add_option("--out", fcm_cli.out, "Write output to this file instead of stdout");
    fcm_cmd->callback([&] { run_fcm_command(fcm_cli); });

    CompareCli compare_cli;
    CLI::App* compare_cmd = app.add_subcommand("compare", "Timed k-means vs fcm comparison with a JSON report");
    add_input_options(compare_cmd, compare_cli.input);
    compare_cmd->add_option("--clusters", compare_cli.clusters, "Cluster counts: N, N,M,... or LO..HI")->required();
    compare_cmd->add_option("--replicates", compare_cli.replicates, "K-means restarts per entry")->default_val(5);
    compare_cmd->add_option("--m", compare_cli.m, "Fuzzifier exponent (> 1)")->default_val(2.0);
    compare_cmd->add_option("--eps", compare_cli.epsilon, "FCM termination threshold")->default_val(1e-6);
    compare_cmd->add_option("--max-iter", compare_cli.max_iterations, "FCM iteration limit")->default_val(100);
    compare_cmd->add_option("--criterion", compare_cli.criterion, "FCM stop test")
        ->check(CLI::IsMember({"membership_delta", "objective_improvement"}))
        ->default_val("membership_delta");
    compare_cmd->add_option("--timing-repeats", compare_cli.timing_repeats, "Timed repeats per entry (median wins)")
        ->default_val(3);
    compare_cmd->add_option("--fixed-iterations", compare_cli.fixed_iterations,
                            "Iteration count for the fixed op-count rows")
        ->default_val(28);
    compare_cmd->add_option("--seed", compare_cli.seed, "Base random stream seed")->default_val(kDefaultSeed);
    compare_cmd->add_option("--format", compare_cli.format, "Stdout format")
        ->check(CLI::IsMember({"human", "json"}))
        ->default_val("human");
    compare_cmd->add_option("--out", compare_cli.out, "Write the JSON report to this file");
    compare_cmd->add_option("--emit-plot-data", compare_cli.plot_dir, "Write plot-ready CSV files to this directory");
    compare_cmd->callback([&] { run_compare_command(compare_cli); });

    ComplexityCli complexity_cli;
    CLI::App* complexity_cmd = app.add_subcommand("complexity", "Analytical op-count table");
    complexity_cmd->add_option("--n", complexity_cli.n, "Number of points")->default_val(200);
    complexity_cmd->add_option("--d", complexity_cli.d, "Dimension")->default_val(4);
    complexity_cmd->add_option("--i", complexity_cli.i, "Iteration count")->default_val(28);
    complexity_cmd->add_option("--clusters", complexity_cli.clusters, "Cluster counts: N, N,M,... or LO..HI")
        ->required();
    complexity_cmd->add_option("--format", complexity_cli.format, "Output format")
        ->check(CLI::IsMember({"human", "json"}))
        ->default_val("human");
    complexity_cmd->add_option("--out", complexity_cli.out, "Write output to this file instead of stdout");
    complexity_cmd->callback([&] { run_complexity_command(complexity_cli); });

    FetchCli fetch_cli;
    CLI::App* fetch_cmd = app.add_subcommand("fetch-data", "Fetch or verify the bundled Iris dataset");
    fetch_cmd->add_option("--dir", fetch_cli.dir, "Dataset directory (default: $CLUSTERBENCH_DATA_DIR or ./data)");
    fetch_cmd->callback([&] { run_fetch_command(fetch_cli); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
