#pragma once

#include <cmath>
#include <cstddef>

namespace clusterbench::detail {

// Loops cheaper than this many inner operations stay on one thread; the
// OpenMP if-clause keeps tiny problems free of fork/join overhead.
inline constexpr std::size_t kParallelMinWork = std::size_t{1} << 15;

inline bool parallel(std::size_t work) { return work >= kParallelMinWork; }

// u^m for the fuzzifier exponent. glibc pow is correctly rounded, so the
// m == 2 branch changes nothing but the cost.
inline double pow_fuzzifier(double u, double m) {
    return m == 2.0 ? u * u : std::pow(u, m);
}

}  // namespace clusterbench::detail
