#include "clusterbench/fcm.hpp"

#include <atomic>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "clusterbench/detail.hpp"
#include "clusterbench/distance.hpp"

namespace clusterbench {

namespace {

void check_fuzzifier(double m) {
    if (!(m > 1.0)) throw std::invalid_argument("fcm: fuzzifier m must be greater than 1");
}

void validate_config(const FcmConfig& config, std::size_t n) {
    if (config.c < 2) throw std::invalid_argument("FCM requires at least two clusters");
    if (config.c > n) throw std::invalid_argument("fcm: more clusters than points");
    check_fuzzifier(config.m);
    if (!(config.epsilon > 0.0 && config.epsilon < 1.0))
        throw std::invalid_argument("fcm: epsilon must lie in (0, 1)");
    if (config.max_iterations == 0) throw std::invalid_argument("fcm: max_iterations must be positive");
}

double max_abs_delta(const MembershipMatrix& a, const MembershipMatrix& b) {
    const std::int64_t total = static_cast<std::int64_t>(a.values.size());
    double delta = 0.0;
    const bool par = detail::parallel(a.values.size());
#pragma omp parallel for if (par) schedule(static) reduction(max : delta)
    for (std::int64_t t = 0; t < total; ++t) {
        const double diff = std::fabs(a.values[static_cast<std::size_t>(t)] - b.values[static_cast<std::size_t>(t)]);
        if (diff > delta) delta = diff;
    }
    return delta;
}

}  // namespace

MembershipMatrix init_membership(std::size_t n, std::size_t c, RandomStream& rng) {
    if (n < 1) throw std::invalid_argument("init_membership: n must be positive");
    if (c < 2) throw std::invalid_argument("FCM requires at least two clusters");

    MembershipMatrix u(n, c);
    for (std::size_t i = 0; i < n; ++i) {
        auto row = u.row(i);
        double sum = 0.0;
        for (std::size_t j = 0; j < c; ++j) {
            row[j] = rng.next_double_open();
            sum += row[j];
        }
        for (std::size_t j = 0; j < c; ++j) row[j] /= sum;
    }
    return u;
}

CentroidSet update_centers(const DataMatrix& data, const MembershipMatrix& u, double m) {
    check_fuzzifier(m);
    if (u.rows != data.rows) throw std::invalid_argument("update_centers: membership rows do not match data");

    const std::size_t n = data.rows;
    const std::size_t d = data.cols;
    const std::int64_t c = static_cast<std::int64_t>(u.clusters);
    CentroidSet centers(u.clusters, d);
    std::atomic<bool> degenerate{false};

    const bool par = detail::parallel(n * u.clusters * d);
    // Column-wise accumulation in ascending point order; thread-count
    // independent for the same reason as the k-means recompute.
#pragma omp parallel for if (par) schedule(static)
    for (std::int64_t j = 0; j < c; ++j) {
        const std::size_t cj = static_cast<std::size_t>(j);
        auto center = centers.center(cj);
        double weight_sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double w = detail::pow_fuzzifier(u.at(i, cj), m);
            weight_sum += w;
            const auto x = data.row(i);
            for (std::size_t t = 0; t < d; ++t) center[t] += w * x[t];
        }
        if (weight_sum == 0.0) {
            degenerate.store(true, std::memory_order_relaxed);
        } else {
            for (std::size_t t = 0; t < d; ++t) center[t] /= weight_sum;
        }
    }
    if (degenerate.load()) throw std::runtime_error("degenerate cluster weight");
    return centers;
}

MembershipMatrix update_membership(const DataMatrix& data, const CentroidSet& centers, double m) {
    check_fuzzifier(m);
    if (centers.dim != data.cols) throw std::invalid_argument("update_membership: center dimension does not match data");
    if (centers.count < 2) throw std::invalid_argument("FCM requires at least two clusters");

    const std::int64_t n = static_cast<std::int64_t>(data.rows);
    const std::size_t c = centers.count;
    const double expo = 1.0 / (m - 1.0);
    const bool ratios_plain = (m == 2.0);  // exponent 1
    MembershipMatrix u(data.rows, c);

    const bool par = detail::parallel(data.rows * c * c);
#pragma omp parallel if (par)
    {
        std::vector<double> d2(c);
#pragma omp for schedule(static)
        for (std::int64_t i = 0; i < n; ++i) {
            const std::size_t pi = static_cast<std::size_t>(i);
            const auto x = data.row(pi);
            std::size_t zero_count = 0;
            for (std::size_t j = 0; j < c; ++j) {
                d2[j] = squared_euclidean(x, centers.center(j));
                if (d2[j] == 0.0) ++zero_count;
            }
            auto row = u.row(pi);
            if (zero_count > 0) {
                // Coincident point: all mass shared equally by the
                // zero-distance centers.
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
    }
    return u;
}

double fcm_objective(const DataMatrix& data, const MembershipMatrix& u, const CentroidSet& centers, double m) {
    check_fuzzifier(m);
    if (u.rows != data.rows || u.clusters != centers.count || centers.dim != data.cols)
        throw std::invalid_argument("fcm_objective: dimensions disagree");

    const std::int64_t n = static_cast<std::int64_t>(data.rows);
    const std::size_t c = centers.count;
    std::vector<double> partial(data.rows);
    const bool par = detail::parallel(data.rows * c * data.cols);
#pragma omp parallel for if (par) schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        const std::size_t pi = static_cast<std::size_t>(i);
        const auto x = data.row(pi);
        double acc = 0.0;
        for (std::size_t j = 0; j < c; ++j)
            acc += detail::pow_fuzzifier(u.at(pi, j), m) * squared_euclidean(x, centers.center(j));
        partial[pi] = acc;
    }
    double total = 0.0;
    for (double s : partial) total += s;
    return total;
}

FcmResult run_fcm(const DataMatrix& data, const FcmConfig& config, RandomStream rng) {
    validate_config(config, data.rows);

    FcmResult result;
    result.membership = init_membership(data.rows, config.c, rng);
    while (result.iterations < config.max_iterations) {
        result.centers = update_centers(data, result.membership, config.m);
        MembershipMatrix next = update_membership(data, result.centers, config.m);
        result.objective_history.push_back(fcm_objective(data, next, result.centers, config.m));
        ++result.iterations;

        const double delta = max_abs_delta(next, result.membership);
        result.membership = std::move(next);

        bool stop = false;
        if (config.criterion == TerminationCriterion::membership_delta) {
            stop = delta < config.epsilon;
        } else {
            const auto& h = result.objective_history;
            stop = h.size() >= 2 && std::fabs(h[h.size() - 1] - h[h.size() - 2]) < config.epsilon;
        }
        if (stop) {
            result.converged = true;
            break;
        }
    }
    return result;
}

}  // namespace clusterbench
