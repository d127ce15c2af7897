#pragma once

#include <cstddef>
#include <vector>

#include "clusterbench/random.hpp"
#include "clusterbench/types.hpp"

namespace clusterbench {

enum class TerminationCriterion {
    membership_delta,        // max entrywise |u' - u| < epsilon
    objective_improvement,   // |J(k) - J(k-1)| < epsilon
};

struct FcmConfig {
    std::size_t c = 2;
    double m = 2.0;           // fuzzifier, strictly greater than 1
    double epsilon = 1e-6;    // termination threshold in (0, 1)
    std::size_t max_iterations = 100;
    TerminationCriterion criterion = TerminationCriterion::membership_delta;
};

struct FcmResult {
    CentroidSet centers;
    MembershipMatrix membership;
    std::vector<double> objective_history;  // one value per update pair
    std::size_t iterations = 0;
    bool converged = false;
};

// Each row is c uniform positives normalized to sum 1.
MembershipMatrix init_membership(std::size_t n, std::size_t c, RandomStream& rng);

// c_j = sum_i u_ij^m x_i / sum_i u_ij^m. A column whose weights all
// underflow to zero raises an error.
CentroidSet update_centers(const DataMatrix& data, const MembershipMatrix& u, double m);

// u_ij = 1 / sum_k (d2_ij / d2_ik)^(1/(m-1)), the membership update written
// on squared distances. A point coinciding with one or more centers splits
// its full membership equally among the zero-distance centers.
MembershipMatrix update_membership(const DataMatrix& data, const CentroidSet& centers, double m);

// J_m = sum_i sum_j u_ij^m d2(x_i, c_j).
double fcm_objective(const DataMatrix& data, const MembershipMatrix& u, const CentroidSet& centers, double m);

// Alternating optimization: centers from the current membership, then a
// membership update, recording J_m per pair, until the configured criterion
// fires or max_iterations is reached.
FcmResult run_fcm(const DataMatrix& data, const FcmConfig& config, RandomStream rng);

}  // namespace clusterbench
