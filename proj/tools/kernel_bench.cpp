// Times the OpenMP kernels against the single-threaded reference on synthetic
// blob data. The parallel kernels are accumulation-order stable, so both
// sides must agree (bit-for-bit for assignments and centers, ~1e-12 for the
// objective reductions); the point of this binary is the speedup column.

#include <omp.h>

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <functional>

#include "clusterbench/fcm.hpp"
#include "clusterbench/ingest.hpp"
#include "clusterbench/kmeans.hpp"
#include "clusterbench/random.hpp"
#include "clusterbench/reference.hpp"

namespace {

using namespace clusterbench;

double time_best_of(std::size_t rounds, const std::function<void()>& body) {
    double best = 1e300;
    for (std::size_t r = 0; r < rounds; ++r) {
        const auto start = std::chrono::steady_clock::now();
        body();
        const auto stop = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double>(stop - start).count());
    }
    return best;
}

void print_row(const char* kernel, double serial, double parallel) {
    std::printf("%-22s  %10.4f  %10.4f  %7.2fx\n", kernel, serial * 1e3, parallel * 1e3, serial / parallel);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"kernel_bench: serial reference vs OpenMP kernels"};
    std::size_t points = 200000;
    std::size_t dim = 8;
    std::size_t clusters = 16;
    std::size_t fcm_points = 20000;
    std::size_t fcm_clusters = 8;
    std::size_t rounds = 5;
    std::uint64_t seed = 42;
    app.add_option("--points", points, "Points for the k-means kernels")->default_val(points);
    app.add_option("--dim", dim, "Dimension")->default_val(dim);
    app.add_option("--clusters", clusters, "Clusters for the k-means kernels")->default_val(clusters);
    app.add_option("--fcm-points", fcm_points, "Points for the fcm kernels")->default_val(fcm_points);
    app.add_option("--fcm-clusters", fcm_clusters, "Clusters for the fcm kernels")->default_val(fcm_clusters);
    app.add_option("--rounds", rounds, "Timing rounds, best-of")->default_val(rounds);
    app.add_option("--seed", seed, "Data seed")->default_val(seed);
    CLI11_PARSE(app, argc, argv);

    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%-22s  %10s  %10s  %8s\n", "kernel", "serial ms", "openmp ms", "speedup");

    // hard clustering kernels
    {
        const BlobSpec spec{clusters, points / clusters, dim, 0.0, 100.0, 5.0};
        const LabeledDataset ds = generate_blobs(spec, RandomStream(seed));
        RandomStream rng(seed);
        const CentroidSet centroids = init_centroids(ds.data, clusters, rng);

        HardAssignment serial_labels, parallel_labels;
        const double t_assign_serial =
            time_best_of(rounds, [&] { serial_labels = reference::assign_points(ds.data, centroids); });
        const double t_assign_parallel =
            time_best_of(rounds, [&] { parallel_labels = assign_points(ds.data, centroids).assignment; });
        if (!(serial_labels == parallel_labels)) {
            std::fprintf(stderr, "assign_points: serial and parallel labels disagree\n");
            return 1;
        }
        print_row("kmeans assign", t_assign_serial, t_assign_parallel);

        CentroidSet serial_means, parallel_means;
        const double t_mean_serial =
            time_best_of(rounds, [&] { serial_means = reference::recompute_centroids(ds.data, serial_labels, clusters); });
        const double t_mean_parallel = time_best_of(
            rounds, [&] { parallel_means = recompute_centroids(ds.data, parallel_labels, clusters).centroids; });
        if (!(serial_means == parallel_means)) {
            std::fprintf(stderr, "recompute_centroids: serial and parallel centroids disagree\n");
            return 1;
        }
        print_row("kmeans recompute", t_mean_serial, t_mean_parallel);
    }

    // fuzzy kernels
    {
        const BlobSpec spec{fcm_clusters, fcm_points / fcm_clusters, dim, 0.0, 100.0, 5.0};
        const LabeledDataset ds = generate_blobs(spec, RandomStream(seed + 1));
        RandomStream rng(seed + 1);
        const MembershipMatrix u = init_membership(ds.data.rows, fcm_clusters, rng);
        const CentroidSet centers = update_centers(ds.data, u, 2.0);

        CentroidSet serial_centers, parallel_centers;
        const double t_centers_serial =
            time_best_of(rounds, [&] { serial_centers = reference::update_centers(ds.data, u, 2.0); });
        const double t_centers_parallel =
            time_best_of(rounds, [&] { parallel_centers = update_centers(ds.data, u, 2.0); });
        if (!(serial_centers == parallel_centers)) {
            std::fprintf(stderr, "update_centers: serial and parallel centers disagree\n");
            return 1;
        }
        print_row("fcm update_centers", t_centers_serial, t_centers_parallel);

        MembershipMatrix serial_u, parallel_u;
        const double t_membership_serial =
            time_best_of(rounds, [&] { serial_u = reference::update_membership(ds.data, centers, 2.0); });
        const double t_membership_parallel =
            time_best_of(rounds, [&] { parallel_u = update_membership(ds.data, centers, 2.0); });
        if (!(serial_u == parallel_u)) {
            std::fprintf(stderr, "update_membership: serial and parallel memberships disagree\n");
            return 1;
        }
        print_row("fcm update_membership", t_membership_serial, t_membership_parallel);

        double serial_j = 0.0, parallel_j = 0.0;
        const double t_obj_serial =
            time_best_of(rounds, [&] { serial_j = reference::fcm_objective(ds.data, serial_u, centers, 2.0); });
        const double t_obj_parallel =
            time_best_of(rounds, [&] { parallel_j = fcm_objective(ds.data, parallel_u, centers, 2.0); });
        const double rel = std::abs(serial_j - parallel_j) / std::max(1.0, std::abs(serial_j));
        if (rel > 1e-12) {
            std::fprintf(stderr, "fcm_objective: serial and parallel totals differ by %.3e (relative)\n", rel);
            return 1;
        }
        print_row("fcm objective", t_obj_serial, t_obj_parallel);
    }

    return 0;
}
