#pragma once

#include <cstdint>

namespace hopf {

// splitmix64. Used instead of <random> engines so that sampled morphisms are
// bit-identical across platforms and standard library implementations.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform-ish draw in [0, n). Modulo bias is irrelevant for the tiny
    // ranges used here and keeps the stream platform-independent.
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

    std::int64_t range(std::int64_t lo, std::int64_t hi) { // inclusive
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

  private:
    std::uint64_t state_;
};

// Stable hash combine for deriving per-hom-set seeds from (plan seed, indices).
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    a ^= b + 0x9E3779B97F4A7C15ull + (a << 6) + (a >> 2);
    return a;
}

} // namespace hopf
