#pragma once

#include <cstdint>
#include <random>

namespace oscnet {

/// SplitMix64 mixing step; used to derive independent seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Deterministic counter scheme for per-run / per-purpose seed streams:
/// stream k of seed s is splitmix64(s + k * golden). Every random draw in
/// the project flows from a single master seed through this function, so
/// runs are reproducible and individually re-runnable.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    return splitmix64(seed + stream * 0x9E3779B97F4A7C15ull);
}

/// mt19937_64 with hand-rolled uniform mapping. std::uniform_real_distribution
/// is implementation-defined, which would break byte-identical traces across
/// standard libraries; (x >> 11) * 2^-53 is not.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform double in [0, 1).
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Fair +1/-1 bit.
    int sign_bit() { return uniform01() < 0.5 ? 1 : -1; }

  private:
    std::mt19937_64 engine_;
};

}  // namespace oscnet
