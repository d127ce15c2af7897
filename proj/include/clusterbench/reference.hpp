#pragma once

#include <cstddef>
#include <vector>

#include "clusterbench/types.hpp"

// Single-threaded reference kernels. These are the plain textbook loops the
// OpenMP kernels are validated against (bit-for-bit where the accumulation
// order matches, within 1e-12 otherwise) and the baseline the kernel
// benchmark compares to.
namespace clusterbench::reference {

HardAssignment assign_points(const DataMatrix& data, const CentroidSet& centroids);

CentroidSet recompute_centroids(const DataMatrix& data, const HardAssignment& assignment, std::size_t k);

std::vector<double> per_cluster_sums(const DataMatrix& data, const HardAssignment& assignment,
                                     const CentroidSet& centroids);

CentroidSet update_centers(const DataMatrix& data, const MembershipMatrix& u, double m);

MembershipMatrix update_membership(const DataMatrix& data, const CentroidSet& centers, double m);

double fcm_objective(const DataMatrix& data, const MembershipMatrix& u, const CentroidSet& centers, double m);

}  // namespace clusterbench::reference
