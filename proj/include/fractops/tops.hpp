#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fractops/address.hpp"
#include "fractops/attractor.hpp"
#include "fractops/ifs.hpp"
#include "fractops/raster.hpp"

namespace fractops {

inline constexpr std::size_t kDefaultBranchCap = 4096;

struct PartitionOptions {
  double tolerance_pixels = 0.25;
  int workers = 1;
  /// Backward steps a candidate symbol must survive before an orbit takes it.
  int lookahead = 6;
};

/// Rasterized tops dynamical system of an IFS.
///
/// cells[n-1] holds the pixels of f_n(A) not in any earlier image, so the
/// cells are disjoint and cover the attractor mask. `labels` holds the least
/// n whose 1-pixel dilated image holds the pixel (0 if none). Orbits refine
/// the label by looking ahead: x counts as a point of f_n(A) only when some
/// backward path starting with f_n^{-1} stays on the dilated attractor for
/// `lookahead` steps, which resolves membership well below one pixel.
struct DomainPartition {
  Ifs ifs;
  PixelGrid grid;
  AttractorMask attractor;
  std::vector<Mask> images;
  std::vector<Mask> dilated_images;
  std::vector<Mask> cells;
  std::vector<Symbol> labels;
  /// Pixels whose 3x3 neighbourhood carries two or more distinct labels.
  Mask boundary;
  /// Per attractor pixel, an attractor point inside it (NaN elsewhere).
  std::vector<Point2> representatives;
  Mask dilated_attractor;
  int lookahead = 1;

  /// Labels come from one-pixel dilations, so points just outside the viewport still resolve.
  Symbol label_at(Point2 x) const {
    auto k = grid.locate_within(x, 1);
    return k ? labels[*k] : Symbol{0};
  }
  bool near_boundary(Point2 x) const {
    auto k = grid.locate_within(x, 1);
    return k && boundary.test(*k);
  }
};

DomainPartition build_partition(const Ifs& ifs, const PixelGrid& grid, const PartitionOptions& options = {});

struct TopsStep {
  Symbol symbol;
  Point2 next;
  /// Another symbol was also admitted: x sits within resolution of two images.
  bool ambiguous = false;
};

/// One step of the tops dynamical system: the least admitted symbol, falling
/// back to the pixel label when the lookahead admits none. Throws
/// OffAttractorError when no dilated image holds x.
TopsStep tops_step(const DomainPartition& part, Point2 x);

struct Itinerary {
  AddressPrefix prefix;
  Point2 terminal;
  /// Some orbit step was ambiguous between two images.
  bool boundary_flag = false;
  /// False when the orbit left the attractor before reaching the requested depth.
  bool complete = true;
};

/// Follows the orbit of x for `depth` steps. Throws OffAttractorError only when
/// x itself is off the attractor; a later exit truncates the itinerary.
Itinerary tops_orbit(const DomainPartition& part, Point2 x, int depth);

struct AddressSet {
  std::vector<AddressPrefix> prefixes;
  bool truncated = false;
};

/// Breadth-first backwards orbits: branch on every n whose image mask holds
/// the current point within `dilation` pixels, continue from f_n^{-1}.
/// Branches that leave the masks are dropped. Throws OffAttractorError when
/// no branch survives.
AddressSet enumerate_addresses(const Ifs& ifs, std::span<const Mask> image_masks, Point2 x, int depth,
                               std::size_t max_count = kDefaultBranchCap, int dilation = 1);

/// Same enumeration against the partition's precomputed dilated images.
AddressSet enumerate_addresses(const DomainPartition& part, Point2 x, int depth,
                               std::size_t max_count = kDefaultBranchCap);

/// ln(distinct depth-n itineraries among `samples` attractor points) / n.
/// A heuristic lower estimate of the shift complexity.
double shift_complexity(const DomainPartition& part, std::size_t samples, int depth, std::uint64_t seed);

}  // namespace fractops
