#pragma once

// Independent reference computations. Nothing here calls into the library
// beyond its plain data types, so agreement is a real cross-check.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "fractops/geometry.hpp"
#include "fractops/raster.hpp"

namespace oracle {

using fractops::AffineMap2;
using fractops::Point2;

/// Solves (I - L) x = t by Cramer's rule.
inline Point2 fixed_point(const AffineMap2& m) {
  const double p = 1.0 - m.a, q = -m.b;
  const double r = -m.d, s = 1.0 - m.e;
  const double det = p * s - q * r;
  return {(m.c * s - q * m.l) / det, (p * m.l - r * m.c) / det};
}

inline Point2 apply(const AffineMap2& m, Point2 x) { return {m.a * x.x + m.b * x.y + m.c, m.d * x.x + m.e * x.y + m.l}; }

/// f_{w[0]} ∘ ... ∘ f_{w[k-1]} applied to x, written as a right-to-left fold.
inline Point2 compose_apply(const std::vector<AffineMap2>& maps, const std::string& word, Point2 x) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) x = apply(maps[static_cast<std::size_t>(*it - '1')], x);
  return x;
}

/// The point of the eventually constant address `head` followed by `tail` repeated forever.
inline Point2 eventually_constant(const std::vector<AffineMap2>& maps, const std::string& head, char tail) {
  return compose_apply(maps, head, oracle::fixed_point(maps[static_cast<std::size_t>(tail - '1')]));
}

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

/// -1, 0, +1 for p < q, p == q, p > q under the tops order of 1-padded digit strings.
inline int tops_compare(std::string p, std::string q) {
  const std::size_t n = std::max(p.size(), q.size());
  p.resize(n, '1');
  q.resize(n, '1');
  if (p == q) return 0;
  // Lexicographically smaller digits are the greater address.
  return p < q ? 1 : -1;
}

inline double code_metric(std::string p, std::string q) {
  const std::size_t n = std::max(p.size(), q.size());
  p.resize(n, '1');
  q.resize(n, '1');
  for (std::size_t k = 0; k < n; ++k) {
    if (p[k] != q[k]) return std::ldexp(1.0, -static_cast<int>(k + 1));
  }
  return 0.0;
}

inline std::vector<Point2> set_centers(const fractops::Mask& m) {
  std::vector<Point2> out;
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (m.test(k)) out.push_back(m.grid().center(k));
  }
  return out;
}

/// Quadratic-time symmetric Hausdorff distance between set pixel centers.
inline double hausdorff(const fractops::Mask& a, const fractops::Mask& b) {
  const auto pa = set_centers(a);
  const auto pb = set_centers(b);
  auto directed = [](const std::vector<Point2>& from, const std::vector<Point2>& to) {
    double worst = 0.0;
    for (Point2 p : from) {
      double best = std::numeric_limits<double>::infinity();
      for (Point2 q : to) best = std::min(best, std::hypot(p.x - q.x, p.y - q.y));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(directed(pa, pb), directed(pb, pa));
}

/// Plots f_w(x) for every word w of length `depth`.
inline void plot_words(const std::vector<AffineMap2>& maps, int depth, Point2 x, fractops::Mask& out) {
  if (depth == 0) {
    out.plot(x);
    return;
  }
  for (const auto& m : maps) plot_words(maps, depth - 1, apply(m, x), out);
}

}  // namespace oracle
