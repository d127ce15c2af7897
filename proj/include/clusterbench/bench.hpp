#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clusterbench/complexity.hpp"
#include "clusterbench/fcm.hpp"
#include "clusterbench/ingest.hpp"
#include "clusterbench/kmeans.hpp"

namespace clusterbench {

struct BenchConfig {
    std::vector<std::size_t> cluster_counts;
    std::size_t replicates = 5;  // hard clustering restarts per entry
    std::uint64_t seed = 42;
    double m = 2.0;
    double epsilon = 1e-6;
    std::size_t max_iterations = 100;
    TerminationCriterion criterion = TerminationCriterion::membership_delta;
    std::size_t timing_repeats = 3;
    // Iteration count used for the fixed-i op-count rows, so tables stay
    // comparable across runs whose observed iteration counts differ.
    std::int64_t fixed_iterations = 28;
};

struct DatasetSummary {
    std::size_t n = 0;
    std::size_t d = 0;
    std::string source;
    std::string checksum;  // sha256 of the input bytes
};

struct KMeansReplicateDetail {
    std::size_t replicate_index = 0;
    std::size_t iterations = 0;
    double total_sumd = 0.0;
    bool converged = false;
};

struct BenchEntry {
    std::string algorithm;  // "kmeans" | "fcm"
    std::size_t clusters = 0;
    bool skipped = false;
    std::string skip_reason;
    double elapsed_seconds = 0.0;  // median over timing repeats
    std::size_t iterations = 0;
    double objective = 0.0;  // best total_sumd or final J_m
    bool converged = false;
    std::vector<KMeansReplicateDetail> replicate_detail;  // kmeans only
};

struct ObservedComplexity {
    std::size_t iterations_used = 0;
    ComplexityRow row;
};

struct BenchReport {
    std::string schema = "clusterbench-report/1";
    DatasetSummary dataset;
    BenchConfig config;
    std::vector<BenchEntry> entries;
    std::vector<ObservedComplexity> complexity_observed;  // i = observed fuzzy iterations
    std::vector<ComplexityRow> complexity_fixed;          // i = config.fixed_iterations
};

// Full clustering outputs backing the report entries, in cluster_counts
// order; absent where an entry was skipped.
struct ComparisonResults {
    BenchReport report;
    std::vector<std::optional<ReplicatedOutcome>> kmeans_runs;
    std::vector<std::optional<FcmResult>> fcm_runs;
};

// Wall-clock measurement on a monotonic clock around the task alone.
template <typename Task>
auto time_run(Task&& task) {
    const auto start = std::chrono::steady_clock::now();
    auto result = task();
    const auto stop = std::chrono::steady_clock::now();
    return std::pair{std::move(result), std::chrono::duration<double>(stop - start).count()};
}

// One timed, seeded hard-clustering entry and one fuzzy entry per cluster
// count (the fuzzy entry is marked skipped below two clusters). Elapsed time
// is the median of timing_repeats identical seeded runs. Any failure aborts
// the whole report.
ComparisonResults run_comparison(const LabeledDataset& ds, const BenchConfig& config,
                                 const DatasetSummary& source_info = {});

// Plot-ready CSV files: per-point hard labels, per-point memberships, fuzzy
// objective history (all per cluster count), timing pairs, and op-count rows.
// Returns the written paths in emission order; output is byte-deterministic
// for a given ComparisonResults.
std::vector<std::filesystem::path> emit_plot_data(const ComparisonResults& results, const LabeledDataset& ds,
                                                  const std::filesystem::path& destination);

// Report serialization (schema "clusterbench-report/1").
std::string report_to_json(const BenchReport& report);
void write_report(const BenchReport& report, const std::filesystem::path& path);

}  // namespace clusterbench
