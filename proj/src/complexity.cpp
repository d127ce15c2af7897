#include "clusterbench/complexity.hpp"

#include <stdexcept>

namespace clusterbench {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t result = 0;
    if (__builtin_mul_overflow(a, b, &result))
        throw std::overflow_error("complexity: operation count exceeds the 64-bit integer range");
    return result;
}

void validate(const ComplexityInputs& inputs) {
    if (inputs.n < 1 || inputs.c < 1 || inputs.d < 1 || inputs.i < 1)
        throw std::invalid_argument("complexity: all inputs must be at least 1");
}

}  // namespace

std::int64_t kmeans_op_count(const ComplexityInputs& inputs) {
    validate(inputs);
    return checked_mul(checked_mul(checked_mul(inputs.n, inputs.c), inputs.d), inputs.i);
}

std::int64_t fcm_op_count(const ComplexityInputs& inputs) {
    validate(inputs);
    return checked_mul(kmeans_op_count(inputs), inputs.c);
}

std::vector<ComplexityRow> complexity_table(std::int64_t n, std::int64_t d, std::int64_t i,
                                            const std::vector<std::int64_t>& c_values) {
    if (c_values.empty()) throw std::invalid_argument("complexity_table: at least one cluster count required");
    std::vector<ComplexityRow> rows;
    rows.reserve(c_values.size());
    for (std::size_t idx = 0; idx < c_values.size(); ++idx) {
        const ComplexityInputs inputs{n, c_values[idx], d, i};
        rows.push_back({idx + 1, c_values[idx], kmeans_op_count(inputs), fcm_op_count(inputs)});
    }
    return rows;
}

}  // namespace clusterbench
