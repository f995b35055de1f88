#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fractops/address.hpp"
#include "fractops/ifs.hpp"
#include "fractops/raster.hpp"
#include "fractops/tops.hpp"

namespace fractops {

struct TransformReport {
  std::size_t pixels_written = 0;
  /// Records replaced by a greater address.
  std::size_t update_conflicts = 0;
  /// Share of the F attractor pixels that received a color, in [0, 1].
  double coverage_fraction = 0.0;
};

/// One candidate offered to a tops canvas.
struct StealSample {
  std::size_t pixel = 0;
  std::vector<Symbol> key;
  Rgb color{0, 0, 0};
  bool colored = false;
  Point2 g_point;
};

/// Per-pixel maximum of (reverse address, colored, color, g point) under
/// the tops order on the address and plain order on the rest. The maximum
/// is associative and commutative, so the final state does not depend on the
/// order samples arrive in.
class TopsCanvas {
 public:
  TopsCanvas(PixelGrid grid, std::size_t depth);

  const PixelGrid& grid() const { return grid_; }
  std::size_t depth() const { return depth_; }

  /// Returns true when the sample replaced (or created) the pixel's record.
  bool offer(std::size_t pixel, std::span<const Symbol> key, Rgb color, bool colored, Point2 g_point);
  bool offer(const StealSample& s) { return offer(s.pixel, s.key, s.color, s.colored, s.g_point); }
  void merge(const TopsCanvas& other);

  bool has_record(std::size_t pixel) const { return present_[pixel] != 0; }
  std::span<const Symbol> key(std::size_t pixel) const { return {keys_.data() + pixel * depth_, depth_}; }
  Rgb color(std::size_t pixel) const { return colors_[pixel]; }
  Point2 g_point(std::size_t pixel) const { return g_points_[pixel]; }

  std::size_t records() const;
  std::size_t replacements() const { return replacements_; }
  RasterPicture picture() const;

  friend bool operator==(const TopsCanvas& a, const TopsCanvas& b);

 private:
  PixelGrid grid_;
  std::size_t depth_;
  std::vector<Symbol> keys_;
  std::vector<std::uint8_t> present_;
  std::vector<std::uint8_t> colored_;
  std::vector<Rgb> colors_;
  std::vector<Point2> g_points_;
  std::size_t replacements_ = 0;
};

struct StealOptions {
  std::uint64_t iterations = 0;
  std::uint64_t seed = 0;
  int burn_in = 100;
  std::size_t depth = kDefaultMaxDepth;
  /// Independent orbits, each on its own stream; merged by tops maximum.
  int orbits = 1;
  int workers = 1;
  bool keep_log = false;
  /// F attractor pixels for the coverage measure; rendered when absent.
  const Mask* attractor = nullptr;
};

struct StealResult {
  RasterPicture picture;
  TransformReport report;
  /// Coverage fell below 0.99 of the attractor pixels.
  bool sampling_failure = false;
  std::vector<StealSample> log;
};

inline constexpr double kCoverageFloor = 0.99;

/// Tops plus color stealing: coupled chaos-game orbits on F and G driven by
/// the same symbols; each F pixel keeps the color of the sample with the
/// greatest reverse address.
StealResult color_steal(const Ifs& F, const Ifs& G, const RasterPicture& picture_g, const PixelGrid& grid_f,
                        const StealOptions& options);

/// Fraction of attractor pixels covered by the canvas.
double coverage_of(const RasterPicture& picture, const Mask& attractor);

struct TransformedPoint {
  Point2 point;
  double error_radius = 0.0;
  bool boundary_flag = false;
  bool complete = true;
};

/// phi_G of the depth-d tops itinerary of x under F.
TransformedPoint transform_point(const DomainPartition& part_f, const Ifs& G, Point2 x, int depth);

struct DeterministicTransform {
  RasterPicture picture;
  TransformReport report;
  /// Pixels whose orbit touched a cell boundary.
  Mask boundary;
};

/// Colors every F attractor pixel from the G picture at the transform of the
/// pixel's representative attractor point.
DeterministicTransform transform_picture_deterministic(const DomainPartition& part_f, const Ifs& G,
                                                       const RasterPicture& picture_g, int depth,
                                                       int workers = 1);

struct ContinuityRow {
  double epsilon = 0.0;
  double max_displacement = 0.0;
  std::size_t pairs = 0;
};

struct ContinuityOptions {
  std::size_t samples = 4000;
  std::size_t cloud = 40000;
  int depth = 24;
  std::uint64_t seed = 1;
};

/// For each epsilon, the largest |T(x) - T(x')| over sampled attractor pairs
/// at most epsilon apart.
std::vector<ContinuityRow> continuity_probe(const DomainPartition& part_f, const Ifs& G,
                                            std::span<const double> epsilons, const ContinuityOptions& options = {});

struct RefinementWitness {
  Point2 x;
  AddressPrefix first;
  AddressPrefix second;
  Point2 first_image;
  Point2 second_image;
  double separation = 0.0;
};

struct RefinementVerdict {
  bool consistent = true;
  std::optional<RefinementWitness> witness;
  double tolerance = 0.0;
  std::size_t points_checked = 0;
  std::size_t multi_address_points = 0;
};

struct RefinementOptions {
  int depth = 10;
  std::size_t samples = 2000;
  int grid_size = 512;
  std::uint64_t seed = 1;
  /// Also probe every eventually constant address w n̄ with |w| below this.
  int structured_prefix = 3;
};

/// Finite-depth necessary-condition test of refinement: every enumerated
/// F-address class must map under phi_G into a set no wider than
/// 4 pixels + l_G^d diam.
RefinementVerdict refinement_check(const Ifs& F, const Ifs& G, const RefinementOptions& options = {});
RefinementVerdict refinement_check(const DomainPartition& part_f, const Ifs& G, const RefinementOptions& options);

struct AreaEstimate {
  double area_f = 0.0;
  double sigma_f = 0.0;
  double area_g = 0.0;
  double sigma_g = 0.0;
  std::size_t accepted = 0;
  double ratio() const { return area_g / area_f; }
  /// Standard error of the ratio by first-order propagation.
  double ratio_sigma() const;
};

struct AreaOptions {
  std::size_t samples = 1000000;
  std::uint64_t seed = 1;
  int depth = 40;
  int count_grid = 256;
};

/// Occupied-cell area of region ∩ A_F and of its image under the transform.
AreaEstimate area_probe(const DomainPartition& part_f, const Ifs& G, const Rect& region,
                        const AreaOptions& options = {});

/// Area of the occupied cells: interior cells count fully, cells with an
/// empty 4-neighbour count half.
struct OccupiedArea {
  double area = 0.0;
  double sigma = 0.0;
};
OccupiedArea occupied_area(const Mask& occupied);

}  // namespace fractops
