#pragma once

#include <cstdint>
#include <vector>

namespace clusterbench {

// Abstract operation-count model for comparing the two algorithms' growth
// rates. Counts are cost units, not measured instruction counts: the hard
// assignment pass costs n*c*d per iteration, while the fuzzy membership pass
// adds one extra factor of c for its per-cluster ratio sum, giving n*c^2*d
// per iteration. The two models coincide exactly at c = 1.
struct ComplexityInputs {
    std::int64_t n = 1;  // points
    std::int64_t c = 1;  // clusters
    std::int64_t d = 1;  // dimension
    std::int64_t i = 1;  // iterations
};

struct ComplexityRow {
    std::size_t experiment_index = 0;  // 1-based
    std::int64_t clusters = 0;
    std::int64_t kmeans_ops = 0;
    std::int64_t fcm_ops = 0;
};

// n * c * d * i, exact integer arithmetic; overflow raises instead of wrapping.
std::int64_t kmeans_op_count(const ComplexityInputs& inputs);

// n * c^2 * d * i, exact integer arithmetic; overflow raises instead of wrapping.
std::int64_t fcm_op_count(const ComplexityInputs& inputs);

// One row per cluster count, in the given order.
std::vector<ComplexityRow> complexity_table(std::int64_t n, std::int64_t d, std::int64_t i,
                                            const std::vector<std::int64_t>& c_values);

}  // namespace clusterbench
