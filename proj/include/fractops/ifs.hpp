#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fractops/address.hpp"
#include "fractops/geometry.hpp"

namespace fractops {

inline constexpr double kContractionMargin = 1e-12;
inline constexpr double kProbabilityTolerance = 1e-12;

/// A validated hyperbolic IFS: invertible strict contractions, a positive
/// probability vector summing to 1, and a viewport with positive extent.
/// Immutable after construction.
class Ifs {
 public:
  std::size_t size() const { return maps_.size(); }
  std::span<const AffineMap2> maps() const { return maps_; }
  const AffineMap2& map(Symbol s) const { return maps_[s - 1]; }
  const AffineMap2& inverse(Symbol s) const { return inverses_[s - 1]; }
  std::span<const AffineMap2> inverses() const { return inverses_; }
  std::span<const double> probabilities() const { return probabilities_; }
  const Rect& viewport() const { return viewport_; }
  /// Largest member contraction factor, strictly below 1.
  double contraction() const { return contraction_; }
  std::span<const double> factors() const { return factors_; }
  const std::string& name() const { return name_; }

  Ifs with_name(std::string name) const;

 private:
  friend Ifs validate_hyperbolic(std::vector<AffineMap2>, std::optional<std::vector<double>>, Rect);

  std::vector<AffineMap2> maps_;
  std::vector<AffineMap2> inverses_;
  std::vector<double> probabilities_;
  std::vector<double> factors_;
  Rect viewport_;
  double contraction_ = 0.0;
  std::string name_;
};

/// Default probabilities are |det| normalized; uniform when all determinants vanish.
Ifs validate_hyperbolic(std::vector<AffineMap2> maps,
                        std::optional<std::vector<double>> probabilities, Rect viewport);

double ifs_contraction(const Ifs& ifs);

}  // namespace fractops
