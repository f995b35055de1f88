#include "fractops/ifs.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "fractops/error.hpp"

namespace fractops {

Ifs Ifs::with_name(std::string name) const {
  Ifs copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

Ifs validate_hyperbolic(std::vector<AffineMap2> maps, std::optional<std::vector<double>> probabilities,
                        Rect viewport) {
  if (maps.empty()) throw ValidationError("an IFS needs at least one map");
  if (maps.size() > kMaxAlphabet) throw ValidationError("an IFS may hold at most 255 maps");
  if (!(viewport.width() > 0.0) || !(viewport.height() > 0.0) || !std::isfinite(viewport.area())) {
    throw ValidationError("viewport must have positive finite width and height");
  }

  Ifs ifs;
  ifs.factors_.reserve(maps.size());
  ifs.inverses_.reserve(maps.size());
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const AffineMap2& m = maps[i];
    for (double v : {m.a, m.b, m.c, m.d, m.e, m.l}) {
      if (!std::isfinite(v)) throw ValidationError("map " + std::to_string(i + 1) + " has a non-finite coefficient");
    }
    const double factor = contraction_factor(m);
    if (!(factor < 1.0 - kContractionMargin)) {
      std::ostringstream msg;
      msg << "map " << i + 1 << " is not a strict contraction (factor " << factor << ")";
      throw NonContractiveError(msg.str());
    }
    try {
      ifs.inverses_.push_back(invert_map(m));
    } catch (const SingularMapError&) {
      throw SingularMapError("map " + std::to_string(i + 1) + " is singular (|det| < 1e-14)");
    }
    ifs.factors_.push_back(factor);
  }

  if (probabilities) {
    auto& p = *probabilities;
    if (p.size() != maps.size()) throw ValidationError("probability vector length differs from map count");
    double sum = 0.0;
    for (double v : p) {
      if (!(v > 0.0) || !std::isfinite(v)) throw ValidationError("probabilities must be positive and finite");
      sum += v;
    }
    if (std::abs(sum - 1.0) > kProbabilityTolerance) throw ValidationError("probabilities must sum to 1");
    ifs.probabilities_ = std::move(p);
  } else {
    std::vector<double> weights(maps.size());
    std::transform(maps.begin(), maps.end(), weights.begin(),
                   [](const AffineMap2& m) { return std::abs(m.determinant()); });
    const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    for (double& w : weights) w = total > 0.0 ? w / total : 1.0 / static_cast<double>(maps.size());
    ifs.probabilities_ = std::move(weights);
  }

  ifs.contraction_ = *std::max_element(ifs.factors_.begin(), ifs.factors_.end());
  ifs.maps_ = std::move(maps);
  ifs.viewport_ = viewport;
  return ifs;
}

double ifs_contraction(const Ifs& ifs) { return ifs.contraction(); }

}  // namespace fractops
