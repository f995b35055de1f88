#include "fractops/raster.hpp"

#include <cmath>
#include <limits>
#include <span>

#include "fractops/error.hpp"

namespace fractops {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_same_grid(const Mask& a, const Mask& b) {
  if (!(a.grid() == b.grid())) throw GridMismatchError("masks live on different pixel grids");
}

// Lower envelope of parabolas over samples at positions k*spacing
// (Felzenszwalb-Huttenlocher). Infinite samples are not sites.
void envelope_1d(std::span<double> f, double spacing, std::vector<int>& v, std::vector<double>& z,
                 std::vector<double>& out) {
  const int n = static_cast<int>(f.size());
  int k = -1;
  for (int q = 0; q < n; ++q) {
    if (!std::isfinite(f[q])) continue;
    const double pq = q * spacing;
    while (k >= 0) {
      const double pv = v[k] * spacing;
      const double s = ((f[q] + pq * pq) - (f[v[k]] + pv * pv)) / (2.0 * (pq - pv));
      if (s <= z[k]) {
        --k;
      } else {
        break;
      }
    }
    ++k;
    v[k] = q;
    if (k == 0) {
      z[k] = -kInf;
    } else {
      const double pv = v[k - 1] * spacing;
      z[k] = ((f[q] + pq * pq) - (f[v[k - 1]] + pv * pv)) / (2.0 * (pq - pv));
    }
    z[k + 1] = kInf;
  }
  if (k < 0) {
    std::fill(out.begin(), out.begin() + n, kInf);
    return;
  }
  int j = 0;
  for (int q = 0; q < n; ++q) {
    const double pq = q * spacing;
    while (z[j + 1] < pq) ++j;
    const double d = pq - v[j] * spacing;
    out[q] = d * d + f[v[j]];
  }
}

}  // namespace

PixelGrid::PixelGrid(int width, int height, Rect viewport) : width_(width), height_(height), viewport_(viewport) {
  if (width <= 0 || height <= 0) throw ValidationError("pixel grid dimensions must be positive");
  if (static_cast<double>(width) * static_cast<double>(height) > 2147483648.0) {
    throw ValidationError("pixel grid exceeds 2^31 pixels");
  }
  if (!(viewport.width() > 0.0) || !(viewport.height() > 0.0)) {
    throw ValidationError("pixel grid viewport must have positive extent");
  }
}

Point2 PixelGrid::center(int i, int j) const {
  return {viewport_.min.x + (i + 0.5) * pitch_x(), viewport_.min.y + (j + 0.5) * pitch_y()};
}

std::size_t Mask::count() const {
  std::size_t n = 0;
  for (auto b : bits_) n += b != 0;
  return n;
}

Mask& Mask::operator|=(const Mask& other) {
  require_same_grid(*this, other);
  for (std::size_t k = 0; k < bits_.size(); ++k) bits_[k] = (bits_[k] | other.bits_[k]) != 0;
  return *this;
}

Mask& Mask::operator&=(const Mask& other) {
  require_same_grid(*this, other);
  for (std::size_t k = 0; k < bits_.size(); ++k) bits_[k] = (bits_[k] & other.bits_[k]) != 0;
  return *this;
}

Mask operator|(Mask lhs, const Mask& rhs) { return lhs |= rhs; }
Mask operator&(Mask lhs, const Mask& rhs) { return lhs &= rhs; }

Mask mask_difference(const Mask& lhs, const Mask& rhs) {
  require_same_grid(lhs, rhs);
  Mask out(lhs.grid());
  for (std::size_t k = 0; k < lhs.size(); ++k) out.set(k, lhs.test(k) && !rhs.test(k));
  return out;
}

Mask dilate(const Mask& m, int radius) {
  if (radius <= 0) return m;
  const PixelGrid& g = m.grid();
  const int w = g.width();
  const int h = g.height();
  // Separable: a square structuring element is a row pass followed by a column pass.
  Mask rows(g);
  for (int j = 0; j < h; ++j) {
    int last = -radius - 1;
    for (int i = 0; i < std::min(w, radius); ++i) {
      if (m.test(i, j)) last = i;
    }
    for (int i = 0; i < w; ++i) {
      const int ahead = i + radius;
      if (ahead < w && m.test(ahead, j)) last = ahead;
      if (last >= i - radius) rows.set(g.index(i, j));
    }
  }
  Mask out(g);
  for (int i = 0; i < w; ++i) {
    int last = -radius - 1;
    for (int j = 0; j < std::min(h, radius); ++j) {
      if (rows.test(i, j)) last = j;
    }
    for (int j = 0; j < h; ++j) {
      const int ahead = j + radius;
      if (ahead < h && rows.test(i, ahead)) last = ahead;
      if (last >= j - radius) out.set(g.index(i, j));
    }
  }
  return out;
}

bool mask_membership(const Mask& m, Point2 pt, int dilation) {
  if (dilation < 0) throw ValidationError("dilation must be non-negative");
  const PixelGrid& g = m.grid();
  auto k = g.locate_within(pt, dilation);
  if (!k) return false;
  const int ci = g.column(*k);
  const int cj = g.row(*k);
  for (int j = std::max(0, cj - dilation); j <= std::min(g.height() - 1, cj + dilation); ++j) {
    for (int i = std::max(0, ci - dilation); i <= std::min(g.width() - 1, ci + dilation); ++i) {
      if (m.test(i, j)) return true;
    }
  }
  return false;
}

std::vector<double> squared_distance_transform(const Mask& m) {
  const PixelGrid& g = m.grid();
  const int w = g.width();
  const int h = g.height();
  std::vector<double> dist(g.pixel_count());
  for (std::size_t k = 0; k < dist.size(); ++k) dist[k] = m.test(k) ? 0.0 : kInf;

  const int n = std::max(w, h);
  std::vector<int> v(n);
  std::vector<double> z(n + 1);
  std::vector<double> line(n);
  std::vector<double> out(n);

  for (int i = 0; i < w; ++i) {
    for (int j = 0; j < h; ++j) line[j] = dist[g.index(i, j)];
    envelope_1d(std::span<double>(line.data(), h), g.pitch_y(), v, z, out);
    for (int j = 0; j < h; ++j) dist[g.index(i, j)] = out[j];
  }
  for (int j = 0; j < h; ++j) {
    auto row = std::span<double>(dist.data() + g.index(0, j), w);
    std::copy(row.begin(), row.end(), line.begin());
    envelope_1d(std::span<double>(line.data(), w), g.pitch_x(), v, z, out);
    std::copy(out.begin(), out.begin() + w, row.begin());
  }
  return dist;
}

double directed_hausdorff(const Mask& from, const Mask& to) {
  require_same_grid(from, to);
  if (!from.any() || !to.any()) throw EmptyMaskError("Hausdorff distance needs two nonempty masks");
  const auto dist = squared_distance_transform(to);
  double worst = 0.0;
  for (std::size_t k = 0; k < from.size(); ++k) {
    if (from.test(k)) worst = std::max(worst, dist[k]);
  }
  return std::sqrt(worst);
}

double hausdorff_pixels(const Mask& m1, const Mask& m2) {
  return std::max(directed_hausdorff(m1, m2), directed_hausdorff(m2, m1));
}

std::size_t RasterPicture::covered_count() const {
  std::size_t n = 0;
  for (auto c : coverage) n += c != 0;
  return n;
}

Mask RasterPicture::coverage_mask() const {
  Mask m(grid);
  for (std::size_t k = 0; k < coverage.size(); ++k) m.set(k, coverage[k] != 0);
  return m;
}

}  // namespace fractops
