#pragma once

#include <span>
#include <stdexcept>

namespace clusterbench {

// Sum of squared coordinate differences, accumulated left to right.
// Symmetric, zero iff a == b entrywise.
inline double squared_euclidean(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw std::invalid_argument("squared_euclidean: dimension mismatch");
    double acc = 0.0;
    for (std::size_t t = 0; t < a.size(); ++t) {
        const double diff = a[t] - b[t];
        acc += diff * diff;
    }
    return acc;
}

}  // namespace clusterbench
