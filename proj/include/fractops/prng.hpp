#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fractops/address.hpp"

namespace fractops {

/// SplitMix64. The state advances by the golden-ratio increment per draw.
class Prng {
 public:
  explicit Prng(std::uint64_t seed = 0) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) with 53 bits.
  double uniform() { return to_unit(next()); }

  std::uint64_t state() const { return state_; }

  static double to_unit(std::uint64_t v) { return static_cast<double>(v >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

struct PrngStep {
  std::uint64_t state;
  std::uint64_t value;
};

PrngStep prng_next(std::uint64_t state);

/// Seed of the w-th independent stream; stream 0 is the seed itself.
std::uint64_t stream_seed(std::uint64_t seed, unsigned stream);

/// Least n (1-based) whose cumulative probability exceeds value/2^64.
Symbol select_symbol(std::uint64_t value, std::span<const double> probabilities);

/// Cumulative table for repeated selection; the last entry is forced to 1.
class SymbolSelector {
 public:
  explicit SymbolSelector(std::span<const double> probabilities);

  Symbol operator()(std::uint64_t value) const {
    const double u = Prng::to_unit(value);
    const std::size_t n = cumulative_.size();
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (cumulative_[k] > u) return static_cast<Symbol>(k + 1);
    }
    return static_cast<Symbol>(n);
  }

 private:
  std::vector<double> cumulative_;
};

}  // namespace fractops
