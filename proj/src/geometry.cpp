#include "fractops/geometry.hpp"

#include <cmath>

#include "fractops/error.hpp"

namespace fractops {

namespace {
constexpr double kSingularDeterminant = 1e-14;
}

AffineMap2 invert_map(const AffineMap2& m) {
  const double det = m.determinant();
  if (!(std::abs(det) >= kSingularDeterminant)) {
    throw SingularMapError("affine map is singular (|det| < 1e-14)");
  }
  AffineMap2 inv;
  inv.a = m.e / det;
  inv.b = -m.b / det;
  inv.d = -m.d / det;
  inv.e = m.a / det;
  inv.c = -(inv.a * m.c + inv.b * m.l);
  inv.l = -(inv.d * m.c + inv.e * m.l);
  return inv;
}

double contraction_factor(const AffineMap2& m) {
  // Eigenvalues of the Gram matrix [[p, r], [r, q]].
  const double p = m.a * m.a + m.d * m.d;
  const double q = m.b * m.b + m.e * m.e;
  const double r = m.a * m.b + m.d * m.e;
  const double largest = 0.5 * (p + q + std::hypot(p - q, 2.0 * r));
  return std::sqrt(largest);
}

AffineMap2 compose(const AffineMap2& outer, const AffineMap2& inner) {
  AffineMap2 out;
  out.a = outer.a * inner.a + outer.b * inner.d;
  out.b = outer.a * inner.b + outer.b * inner.e;
  out.d = outer.d * inner.a + outer.e * inner.d;
  out.e = outer.d * inner.b + outer.e * inner.e;
  out.c = outer.a * inner.c + outer.b * inner.l + outer.c;
  out.l = outer.d * inner.c + outer.e * inner.l + outer.l;
  return out;
}

Point2 fixed_point(const AffineMap2& m) {
  // (I - L) x = t
  const double p = 1.0 - m.a;
  const double q = -m.b;
  const double r = -m.d;
  const double s = 1.0 - m.e;
  const double det = p * s - q * r;
  if (det == 0.0) {
    throw SingularMapError("affine map has no unique fixed point");
  }
  return {(s * m.c - q * m.l) / det, (p * m.l - r * m.c) / det};
}

}  // namespace fractops
