#include "clusterbench/kmeans.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "clusterbench/detail.hpp"
#include "clusterbench/distance.hpp"

namespace clusterbench {

namespace {

void check_dims(const DataMatrix& data, const CentroidSet& centroids) {
    if (data.cols != centroids.dim) throw std::invalid_argument("kmeans: data and centroid dimensions disagree");
    if (centroids.count == 0) throw std::invalid_argument("kmeans: empty centroid set");
}

void check_assignment(const DataMatrix& data, const HardAssignment& assignment, std::size_t k) {
    if (assignment.size() != data.rows) throw std::invalid_argument("kmeans: assignment length does not match data");
    for (int label : assignment.labels) {
        if (label < 0 || static_cast<std::size_t>(label) >= k)
            throw std::invalid_argument("kmeans: cluster index out of range");
    }
}

}  // namespace

CentroidSet init_centroids(const DataMatrix& data, std::size_t k, RandomStream& rng) {
    if (k == 0) throw std::invalid_argument("init_centroids: k must be positive");
    if (k > data.rows) throw std::invalid_argument("init_centroids: more clusters than points");

    // Partial Fisher-Yates over the row indices; the first k slots are a
    // uniform sample without replacement, in sampled order.
    std::vector<std::size_t> idx(data.rows);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    CentroidSet out(k, data.cols);
    for (std::size_t t = 0; t < k; ++t) {
        const std::size_t pick = t + static_cast<std::size_t>(rng.below(data.rows - t));
        std::swap(idx[t], idx[pick]);
        const auto src = data.row(idx[t]);
        std::copy(src.begin(), src.end(), out.center(t).begin());
    }
    return out;
}

AssignOutcome assign_points(const DataMatrix& data, const CentroidSet& centroids) {
    check_dims(data, centroids);
    const std::int64_t n = static_cast<std::int64_t>(data.rows);
    const std::size_t k = centroids.count;
    AssignOutcome out{HardAssignment{std::vector<int>(data.rows)}, std::vector<double>(data.rows)};

    const bool par = detail::parallel(data.rows * k * data.cols);
#pragma omp parallel for if (par) schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        const auto x = data.row(static_cast<std::size_t>(i));
        int best = 0;
        double best_d = squared_euclidean(x, centroids.center(0));
        for (std::size_t j = 1; j < k; ++j) {
            const double d = squared_euclidean(x, centroids.center(j));
            if (d < best_d) {
                best_d = d;
                best = static_cast<int>(j);
            }
        }
        out.assignment.labels[static_cast<std::size_t>(i)] = best;
        out.distances[static_cast<std::size_t>(i)] = best_d;
    }
    return out;
}

RecomputeOutcome recompute_centroids(const DataMatrix& data, const HardAssignment& assignment, std::size_t k) {
    if (k == 0) throw std::invalid_argument("recompute_centroids: k must be positive");
    check_assignment(data, assignment, k);

    const std::size_t n = data.rows;
    const std::size_t d = data.cols;
    std::vector<std::size_t> counts(k, 0);
    for (int label : assignment.labels) ++counts[static_cast<std::size_t>(label)];

    CentroidSet centroids(k, d);
    const std::int64_t kk = static_cast<std::int64_t>(k);
    const bool par = detail::parallel(n * k);
    // Per-cluster accumulation scans points in ascending index order, so the
    // result is independent of the thread count.
#pragma omp parallel for if (par) schedule(static)
    for (std::int64_t j = 0; j < kk; ++j) {
        const std::size_t cj = static_cast<std::size_t>(j);
        if (counts[cj] == 0) continue;
        auto center = centroids.center(cj);
        for (std::size_t i = 0; i < n; ++i) {
            if (static_cast<std::size_t>(assignment.labels[i]) != cj) continue;
            const auto x = data.row(i);
            for (std::size_t t = 0; t < d; ++t) center[t] += x[t];
        }
        for (std::size_t t = 0; t < d; ++t) center[t] /= static_cast<double>(counts[cj]);
    }

    std::vector<std::size_t> repaired;
    bool any_empty = false;
    for (std::size_t j = 0; j < k; ++j) any_empty |= (counts[j] == 0);
    if (any_empty) {
        // Distance of each point to its own cluster mean; a repaired point's
        // distance drops to zero so later empty slots pick the next-farthest.
        std::vector<double> dist(n);
        for (std::size_t i = 0; i < n; ++i)
            dist[i] = squared_euclidean(data.row(i), centroids.center(static_cast<std::size_t>(assignment.labels[i])));
        for (std::size_t j = 0; j < k; ++j) {
            if (counts[j] != 0) continue;
            std::size_t farthest = 0;
            for (std::size_t i = 1; i < n; ++i)
                if (dist[i] > dist[farthest]) farthest = i;
            const auto src = data.row(farthest);
            std::copy(src.begin(), src.end(), centroids.center(j).begin());
            dist[farthest] = 0.0;
            repaired.push_back(j);
        }
    }
    return {std::move(centroids), std::move(repaired)};
}

std::vector<double> per_cluster_sums(const DataMatrix& data, const HardAssignment& assignment,
                                     const CentroidSet& centroids) {
    check_dims(data, centroids);
    check_assignment(data, assignment, centroids.count);

    const std::size_t n = data.rows;
    const std::int64_t kk = static_cast<std::int64_t>(centroids.count);
    std::vector<double> sums(centroids.count, 0.0);
    const bool par = detail::parallel(n * centroids.count * data.cols);
#pragma omp parallel for if (par) schedule(static)
    for (std::int64_t j = 0; j < kk; ++j) {
        const std::size_t cj = static_cast<std::size_t>(j);
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (static_cast<std::size_t>(assignment.labels[i]) != cj) continue;
            acc += squared_euclidean(data.row(i), centroids.center(cj));
        }
        sums[cj] = acc;
    }
    return sums;
}

double kmeans_objective(const DataMatrix& data, const HardAssignment& assignment, const CentroidSet& centroids) {
    const auto sums = per_cluster_sums(data, assignment, centroids);
    double total = 0.0;
    for (double s : sums) total += s;
    return total;
}

KMeansResult run_kmeans_once(const DataMatrix& data, const KMeansConfig& config, RandomStream rng) {
    if (config.max_iterations == 0) throw std::invalid_argument("run_kmeans_once: max_iterations must be positive");
    CentroidSet centroids = init_centroids(data, config.k, rng);

    KMeansResult result;
    std::vector<int> prev_labels;
    for (;;) {
        auto assigned = assign_points(data, centroids);
        ++result.iterations;
        const bool fixed_point = !prev_labels.empty() && assigned.assignment.labels == prev_labels;
        result.assignment = std::move(assigned.assignment);
        if (fixed_point) {
            result.converged = true;
            break;
        }
        if (result.iterations == config.max_iterations) break;
        prev_labels = result.assignment.labels;
        centroids = recompute_centroids(data, result.assignment, config.k).centroids;
    }

    // Final centroids are the means of the final assignment. At a fixed point
    // this recompute reproduces the loop's last centroids bit for bit.
    result.centroids = recompute_centroids(data, result.assignment, config.k).centroids;
    result.per_cluster_sumd = per_cluster_sums(data, result.assignment, result.centroids);
    result.total_sumd = 0.0;
    for (double s : result.per_cluster_sumd) result.total_sumd += s;
    return result;
}

ReplicatedOutcome run_kmeans_replicated(const DataMatrix& data, const KMeansConfig& config,
                                        const RandomStream& rng) {
    if (config.replicates == 0) throw std::invalid_argument("run_kmeans_replicated: replicates must be positive");

    ReplicatedOutcome out;
    out.all.reserve(config.replicates);
    for (std::size_t r = 0; r < config.replicates; ++r) {
        KMeansResult result = run_kmeans_once(data, config, derive_stream(rng, r));
        result.replicate_index = r;
        out.all.push_back(std::move(result));
    }
    std::size_t best = 0;
    for (std::size_t r = 1; r < out.all.size(); ++r)
        if (out.all[r].total_sumd < out.all[best].total_sumd) best = r;
    out.best = out.all[best];
    return out;
}

}  // namespace clusterbench
