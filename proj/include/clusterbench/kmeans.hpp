#pragma once

#include <cstddef>
#include <vector>

#include "clusterbench/random.hpp"
#include "clusterbench/types.hpp"

namespace clusterbench {

struct KMeansConfig {
    std::size_t k = 1;
    std::size_t max_iterations = 100;
    std::size_t replicates = 1;
};

struct KMeansResult {
    HardAssignment assignment;
    CentroidSet centroids;
    std::vector<double> per_cluster_sumd;  // within-cluster sums of squared distances
    double total_sumd = 0.0;
    std::size_t iterations = 0;  // assignment passes
    bool converged = false;
    std::size_t replicate_index = 0;
};

// k distinct data rows sampled uniformly without replacement; output order is
// the sampled order.
CentroidSet init_centroids(const DataMatrix& data, std::size_t k, RandomStream& rng);

struct AssignOutcome {
    HardAssignment assignment;
    std::vector<double> distances;  // squared distance to the assigned centroid
};

// Nearest-centroid labeling; ties go to the lowest cluster index.
AssignOutcome assign_points(const DataMatrix& data, const CentroidSet& centroids);

struct RecomputeOutcome {
    CentroidSet centroids;
    std::vector<std::size_t> repaired_clusters;
};

// Each nonempty cluster's centroid becomes the mean of its members. An empty
// cluster is repaired by moving its centroid onto the point farthest from its
// own cluster mean (ties to the lowest point index); empty slots are repaired
// in ascending index order and a chosen point is not picked twice.
RecomputeOutcome recompute_centroids(const DataMatrix& data, const HardAssignment& assignment, std::size_t k);

// Within-cluster sums of squared point-to-centroid distances, one per cluster.
std::vector<double> per_cluster_sums(const DataMatrix& data, const HardAssignment& assignment,
                                     const CentroidSet& centroids);

// Total of per_cluster_sums.
double kmeans_objective(const DataMatrix& data, const HardAssignment& assignment, const CentroidSet& centroids);

// Lloyd iteration from a random-row start: alternate assign/recompute until
// the assignment repeats (converged) or max_iterations assignment passes.
// Returned centroids are the means of the final assignment, and the sums are
// computed against them.
KMeansResult run_kmeans_once(const DataMatrix& data, const KMeansConfig& config, RandomStream rng);

struct ReplicatedOutcome {
    KMeansResult best;
    std::vector<KMeansResult> all;
};

// Replicate r runs from derive_stream(rng, r); best is the lowest total_sumd,
// ties broken by the lower replicate index.
ReplicatedOutcome run_kmeans_replicated(const DataMatrix& data, const KMeansConfig& config, const RandomStream& rng);

}  // namespace clusterbench
