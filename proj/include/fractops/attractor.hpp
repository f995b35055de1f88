#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "fractops/address.hpp"
#include "fractops/ifs.hpp"
#include "fractops/raster.hpp"

namespace fractops {

inline constexpr double kRenderBudget = 1e8;
inline constexpr int kDefaultBurnIn = 100;

struct PhiResult {
  Point2 point;
  /// Bound on the distance from point to the address function at the padded prefix.
  double error_radius = 0.0;
};

/// f_{p1} ∘ ... ∘ f_{p|p|}(x0), innermost map first; x0 defaults to the viewport center.
PhiResult phi_eval(const Ifs& ifs, const AddressPrefix& p, std::optional<Point2> x0 = std::nullopt);

/// Smallest K with l^K * diam(viewport) <= pixel pitch.
int required_depth(const Ifs& ifs, const PixelGrid& grid);

/// All N^K compositions applied to the viewport center. Throws BudgetExceededError
/// when N^K exceeds 1e8.
AttractorMask render_deterministic(const Ifs& ifs, int depth, const PixelGrid& grid);

struct ConvergedOptions {
  /// A branch stops once its whole sub-attractor lies within this many pixels of its leaf.
  double tolerance_pixels = 0.25;
  bool with_images = false;
  bool with_representatives = false;
  int workers = 1;
};

/// Pixel-converged render. Every plotted point is the image of an attractor
/// point under a composition, so every set pixel touches the attractor. A
/// branch stops when its sub-attractor fits in one pixel, when it is within
/// tolerance of its point, or when every pixel its bounding box meets is
/// already set in its first-symbol image.
struct ConvergedRender {
  AttractorMask mask;
  /// Pixels of f_n(A) for n = 1..N, when requested.
  std::vector<Mask> images;
  /// Per set pixel, the leaf closest to the pixel center (NaN elsewhere), when requested.
  std::vector<Point2> representatives;
  /// Address-tree nodes visited.
  std::size_t leaves = 0;
};

ConvergedRender render_converged(const Ifs& ifs, const PixelGrid& grid, const ConvergedOptions& options = {});

struct ChaosOptions {
  std::uint64_t iterations = 0;
  std::uint64_t seed = 0;
  int burn_in = kDefaultBurnIn;
  int workers = 1;
};

/// Chaos game from the viewport center, plotting iterations k > burn_in.
/// Workers run independent streams over a split of the iterations.
AttractorMask render_chaos(const Ifs& ifs, const ChaosOptions& options, const PixelGrid& grid);

/// Iterations handled by worker w when `total` is split over `workers`.
std::uint64_t worker_share(std::uint64_t total, int workers, int w);

/// The fixed point of f_1, which lies on the attractor.
Point2 attractor_anchor(const Ifs& ifs);

/// An axis-aligned box containing the attractor.
Rect attractor_box(const Ifs& ifs);

/// Radius about the anchor containing the whole attractor.
double attractor_radius(const Ifs& ifs);

/// Points of the attractor under the uniform measure on addresses, evaluated
/// at the given depth from the anchor.
std::vector<Point2> sample_attractor(const Ifs& ifs, std::size_t count, std::uint64_t seed, int depth = 64);

}  // namespace fractops
