#include "fractops/prng.hpp"

namespace fractops {

PrngStep prng_next(std::uint64_t state) {
  Prng rng(state);
  const std::uint64_t value = rng.next();
  return {rng.state(), value};
}

std::uint64_t stream_seed(std::uint64_t seed, unsigned stream) {
  if (stream == 0) return seed;
  Prng mixer(seed + static_cast<std::uint64_t>(stream) * 0xD1B54A32D192ED03ULL);
  return mixer.next();
}

SymbolSelector::SymbolSelector(std::span<const double> probabilities) : cumulative_(probabilities.size()) {
  double running = 0.0;
  for (std::size_t k = 0; k < probabilities.size(); ++k) {
    running += probabilities[k];
    cumulative_[k] = running;
  }
  if (!cumulative_.empty()) cumulative_.back() = 1.0;
}

Symbol select_symbol(std::uint64_t value, std::span<const double> probabilities) {
  return SymbolSelector(probabilities)(value);
}

}  // namespace fractops
