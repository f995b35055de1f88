#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "fractops/geometry.hpp"

namespace fractops {

/// Maps a viewport onto a width x height raster. Pixel (i, j) has column i,
/// row j; row 0 sits at the viewport's minimum y. Binning is half-open except
/// that the maximum edges fall into the last column and row.
class PixelGrid {
 public:
  PixelGrid(int width, int height, Rect viewport);

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t pixel_count() const { return static_cast<std::size_t>(width_) * static_cast<std::size_t>(height_); }
  const Rect& viewport() const { return viewport_; }
  double pitch_x() const { return viewport_.width() / width_; }
  double pitch_y() const { return viewport_.height() / height_; }
  /// The larger pixel side, used as "one pixel" in tolerances.
  double pitch() const { return std::max(pitch_x(), pitch_y()); }

  std::size_t index(int i, int j) const { return static_cast<std::size_t>(j) * width_ + i; }
  int column(std::size_t index) const { return static_cast<int>(index % static_cast<std::size_t>(width_)); }
  int row(std::size_t index) const { return static_cast<int>(index / static_cast<std::size_t>(width_)); }
  Point2 center(int i, int j) const;
  Point2 center(std::size_t index) const { return center(column(index), row(index)); }

  /// Pixel containing p; nullopt outside the viewport (or non-finite p).
  std::optional<std::size_t> locate(Point2 p) const {
    if (!(p.x >= viewport_.min.x && p.x <= viewport_.max.x && p.y >= viewport_.min.y && p.y <= viewport_.max.y)) {
      return std::nullopt;
    }
    int i = static_cast<int>((p.x - viewport_.min.x) / viewport_.width() * width_);
    int j = static_cast<int>((p.y - viewport_.min.y) / viewport_.height() * height_);
    if (i >= width_) i = width_ - 1;
    if (j >= height_) j = height_ - 1;
    return index(i, j);
  }

  /// Like locate, but points up to `margin` pixels outside the viewport snap
  /// to the nearest edge pixel.
  std::optional<std::size_t> locate_within(Point2 p, int margin) const {
    const double mx = margin * pitch_x();
    const double my = margin * pitch_y();
    if (!(p.x >= viewport_.min.x - mx && p.x <= viewport_.max.x + mx && p.y >= viewport_.min.y - my &&
          p.y <= viewport_.max.y + my)) {
      return std::nullopt;
    }
    return locate({std::clamp(p.x, viewport_.min.x, viewport_.max.x), std::clamp(p.y, viewport_.min.y, viewport_.max.y)});
  }

  friend bool operator==(const PixelGrid&, const PixelGrid&) = default;

 private:
  int width_;
  int height_;
  Rect viewport_;
};

/// One boolean per pixel of a grid.
class Mask {
 public:
  explicit Mask(PixelGrid grid) : grid_(grid), bits_(grid.pixel_count(), 0) {}

  const PixelGrid& grid() const { return grid_; }
  std::size_t size() const { return bits_.size(); }
  bool test(std::size_t index) const { return bits_[index] != 0; }
  bool test(int i, int j) const { return bits_[grid_.index(i, j)] != 0; }
  void set(std::size_t index, bool value = true) { bits_[index] = value ? 1 : 0; }
  /// Sets the pixel containing p; points outside the viewport are dropped.
  void plot(Point2 p) {
    if (auto k = grid_.locate(p)) bits_[*k] = 1;
  }
  std::size_t count() const;
  bool any() const { return count() > 0; }

  std::vector<std::uint8_t>& bytes() { return bits_; }
  const std::vector<std::uint8_t>& bytes() const { return bits_; }

  Mask& operator|=(const Mask& other);
  Mask& operator&=(const Mask& other);
  friend bool operator==(const Mask&, const Mask&) = default;

 private:
  PixelGrid grid_;
  std::vector<std::uint8_t> bits_;
};

using AttractorMask = Mask;

Mask operator|(Mask lhs, const Mask& rhs);
Mask operator&(Mask lhs, const Mask& rhs);
/// Pixels of lhs not in rhs.
Mask mask_difference(const Mask& lhs, const Mask& rhs);

/// Chebyshev dilation by `radius` pixels.
Mask dilate(const Mask& m, int radius);

/// True iff a set pixel lies within Chebyshev distance `dilation` of pt's pixel.
bool mask_membership(const Mask& m, Point2 pt, int dilation);

/// Squared Euclidean distance (viewport units) from each pixel center to the
/// nearest set pixel center; +inf everywhere for an empty mask.
std::vector<double> squared_distance_transform(const Mask& m);

/// Symmetric Hausdorff distance between the set-pixel centers, in viewport units.
double hausdorff_pixels(const Mask& m1, const Mask& m2);

/// max over set pixels of `from` of the distance to the nearest set pixel of `to`.
double directed_hausdorff(const Mask& from, const Mask& to);

using Rgb = std::array<std::uint8_t, 3>;

/// Colors plus a coverage flag per pixel; colors are meaningful only where covered.
struct RasterPicture {
  explicit RasterPicture(PixelGrid g) : grid(g), pixels(g.pixel_count(), Rgb{0, 0, 0}), coverage(g.pixel_count(), 0) {}

  PixelGrid grid;
  std::vector<Rgb> pixels;
  std::vector<std::uint8_t> coverage;

  /// Color at p, or nullopt when p is outside the viewport or uncovered.
  std::optional<Rgb> sample(Point2 p) const {
    auto k = grid.locate(p);
    if (!k || !coverage[*k]) return std::nullopt;
    return pixels[*k];
  }
  std::size_t covered_count() const;
  Mask coverage_mask() const;
};

inline std::uint32_t pack_rgb(Rgb c) {
  return (static_cast<std::uint32_t>(c[0]) << 16) | (static_cast<std::uint32_t>(c[1]) << 8) | c[2];
}

}  // namespace fractops
