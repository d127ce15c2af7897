#pragma once

#include <cstdint>

namespace clusterbench {

// Deterministic 64-bit random stream. The generator is splitmix64, written
// out in full in docs/randomness.md so that the exact draw sequence can be
// reproduced in any language; identical seeds give bit-identical sequences
// on every platform.
class RandomStream {
public:
    RandomStream() = default;
    explicit RandomStream(std::uint64_t seed) : seed_(seed), state_(seed) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t position() const { return draws_; }

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ull;
        ++draws_;
        return mix(state_);
    }

    // Uniform in [0, 1), 53-bit resolution.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in (0, 1); never returns an exact 0 or 1.
    double next_double_open() { return (static_cast<double>(next_u64() >> 12) + 0.5) * 0x1.0p-52; }

    // Uniform integer in [0, bound) by the multiply-shift mapping.
    std::uint64_t below(std::uint64_t bound) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
    }

    // Independent child stream determined by (seed, label) alone; advancing
    // this stream does not change what derive() returns. Distinct labels give
    // distinct child seeds (the mapping below is a bijection per label).
    RandomStream derive(std::uint64_t label) const {
        return RandomStream(mix(seed_ + 0x9E3779B97F4A7C15ull * (label + 1)));
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_ = 0;
    std::uint64_t state_ = 0;
    std::uint64_t draws_ = 0;
};

inline RandomStream derive_stream(const RandomStream& base, std::uint64_t label) {
    return base.derive(label);
}

}  // namespace clusterbench
