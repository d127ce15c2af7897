#include "clusterbench/reference.hpp"

#include <cmath>
#include <stdexcept>

#include "clusterbench/detail.hpp"
#include "clusterbench/distance.hpp"

namespace clusterbench::reference {

HardAssignment assign_points(const DataMatrix& data, const CentroidSet& centroids) {
    HardAssignment out{std::vector<int>(data.rows)};
    for (std::size_t i = 0; i < data.rows; ++i) {
        const auto x = data.row(i);
        int best = 0;
        double best_d = squared_euclidean(x, centroids.center(0));
        for (std::size_t j = 1; j < centroids.count; ++j) {
            const double d = squared_euclidean(x, centroids.center(j));
            if (d < best_d) {
                best_d = d;
                best = static_cast<int>(j);
            }
        }
        out.labels[i] = best;
    }
    return out;
}

CentroidSet recompute_centroids(const DataMatrix& data, const HardAssignment& assignment, std::size_t k) {
    const std::size_t n = data.rows;
    const std::size_t d = data.cols;
    CentroidSet centroids(k, d);
    std::vector<std::size_t> counts(k, 0);
    for (int label : assignment.labels) ++counts[static_cast<std::size_t>(label)];
    for (std::size_t j = 0; j < k; ++j) {
        if (counts[j] == 0) continue;
        auto center = centroids.center(j);
        for (std::size_t i = 0; i < n; ++i) {
            if (static_cast<std::size_t>(assignment.labels[i]) != j) continue;
            const auto x = data.row(i);
            for (std::size_t t = 0; t < d; ++t) center[t] += x[t];
        }
        for (std::size_t t = 0; t < d; ++t) center[t] /= static_cast<double>(counts[j]);
    }
    return centroids;
}

std::vector<double> per_cluster_sums(const DataMatrix& data, const HardAssignment& assignment,
                                     const CentroidSet& centroids) {
    std::vector<double> sums(centroids.count, 0.0);
    for (std::size_t j = 0; j < centroids.count; ++j) {
        double acc = 0.0;
        for (std::size_t i = 0; i < data.rows; ++i) {
            if (static_cast<std::size_t>(assignment.labels[i]) != j) continue;
            acc += squared_euclidean(data.row(i), centroids.center(j));
        }
        sums[j] = acc;
    }
    return sums;
}

CentroidSet update_centers(const DataMatrix& data, const MembershipMatrix& u, double m) {
    const std::size_t n = data.rows;
    const std::size_t d = data.cols;
    CentroidSet centers(u.clusters, d);
    for (std::size_t j = 0; j < u.clusters; ++j) {
        auto center = centers.center(j);
        double weight_sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double w = detail::pow_fuzzifier(u.at(i, j), m);
            weight_sum += w;
            const auto x = data.row(i);
            for (std::size_t t = 0; t < d; ++t) center[t] += w * x[t];
        }
        if (weight_sum == 0.0) throw std::runtime_error("degenerate cluster weight");
        for (std::size_t t = 0; t < d; ++t) center[t] /= weight_sum;
    }
    return centers;
}

MembershipMatrix update_membership(const DataMatrix& data, const CentroidSet& centers, double m) {
    const std::size_t c = centers.count;
    const double expo = 1.0 / (m - 1.0);
    const bool ratios_plain = (m == 2.0);
    MembershipMatrix u(data.rows, c);
    std::vector<double> d2(c);
    for (std::size_t i = 0; i < data.rows; ++i) {
        const auto x = data.row(i);
        std::size_t zero_count = 0;
        for (std::size_t j = 0; j < c; ++j) {
            d2[j] = squared_euclidean(x, centers.center(j));
            if (d2[j] == 0.0) ++zero_count;
        }
        auto row = u.row(i);
        if (zero_count > 0) {
            const double share = 1.0 / static_cast<double>(zero_count);
            for (std::size_t j = 0; j < c; ++j) row[j] = (d2[j] == 0.0) ? share : 0.0;
            continue;
        }
        for (std::size_t j = 0; j < c; ++j) {
            double denom = 0.0;
            for (std::size_t k = 0; k < c; ++k) {
                const double ratio = d2[j] / d2[k];
                denom += ratios_plain ? ratio : std::pow(ratio, expo);
            }
            row[j] = 1.0 / denom;
        }
    }
    return u;
}

double fcm_objective(const DataMatrix& data, const MembershipMatrix& u, const CentroidSet& centers, double m) {
    double total = 0.0;
    for (std::size_t i = 0; i < data.rows; ++i) {
        const auto x = data.row(i);
        for (std::size_t j = 0; j < centers.count; ++j)
            total += detail::pow_fuzzifier(u.at(i, j), m) * squared_euclidean(x, centers.center(j));
    }
    return total;
}

}  // namespace clusterbench::reference
