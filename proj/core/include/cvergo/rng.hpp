#pragma once

// Deterministic random streams for reproducible ensembles.
//
// std::uniform_real_distribution is not bit-reproducible across standard
// library implementations, and byte-identical rerun output is part of the
// contract of the sampling commands. This splitmix64-based generator gives
// the same doubles on every platform, and each (seed, stream) pair opens an
// independent stream so ensemble members can be generated in any order (or
// in parallel) without changing their values.

#include <cmath>
#include <cstdint>

namespace cvergo {

/// splitmix64 step: advances the state and returns a full-period 64-bit word.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Independent deterministic stream identified by (seed, stream_id).
class DeterministicRng {
public:
  explicit DeterministicRng(std::uint64_t seed, std::uint64_t stream_id = 0) {
    // Decorrelate the (seed, stream) pair by running each through the
    // splitmix64 output function before mixing.
    std::uint64_t a = seed;
    std::uint64_t b = ~stream_id;
    state_ = splitmix64_next(a) ^ (splitmix64_next(b) + 0x632be59bd9b4e019ULL);
  }

  std::uint64_t next_u64() { return splitmix64_next(state_); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Log-uniform double in [lo, hi), lo > 0.
  double log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }

private:
  std::uint64_t state_;
};

} // namespace cvergo
