#pragma once

#include <cmath>

namespace fractops {

/// A point of the plane in viewport units.
struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

inline double distance(Point2 p, Point2 q) { return std::hypot(p.x - q.x, p.y - q.y); }

inline bool is_finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

/// Axis-aligned rectangle [min.x, max.x] x [min.y, max.y].
struct Rect {
  Point2 min;
  Point2 max;

  double width() const { return max.x - min.x; }
  double height() const { return max.y - min.y; }
  double diameter() const { return std::hypot(width(), height()); }
  double area() const { return width() * height(); }
  Point2 center() const { return {0.5 * (min.x + max.x), 0.5 * (min.y + max.y)}; }
  bool contains(Point2 p) const {
    return p.x >= min.x && p.x <= max.x && p.y >= min.y && p.y <= max.y;
  }

  friend bool operator==(const Rect&, const Rect&) = default;
};

/// The planar affine map (x, y) -> (a*x + b*y + c, d*x + e*y + l).
struct AffineMap2 {
  double a = 1.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
  double e = 1.0;
  double l = 0.0;

  double determinant() const { return a * e - b * d; }

  friend bool operator==(const AffineMap2&, const AffineMap2&) = default;
};

inline Point2 apply_map(const AffineMap2& m, Point2 p) {
  return {m.a * p.x + m.b * p.y + m.c, m.d * p.x + m.e * p.y + m.l};
}

/// Throws SingularMapError when |det| < 1e-14.
AffineMap2 invert_map(const AffineMap2& m);

/// Largest singular value of the linear part [[a, b], [d, e]].
double contraction_factor(const AffineMap2& m);

/// outer ∘ inner.
AffineMap2 compose(const AffineMap2& outer, const AffineMap2& inner);

/// The unique fixed point of a map whose linear part does not have eigenvalue 1.
Point2 fixed_point(const AffineMap2& m);

}  // namespace fractops
