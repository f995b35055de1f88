#include <cmath>

#include "doctest.h"
#include "fractops/error.hpp"
#include "fractops/geometry.hpp"
#include "oracles.hpp"

using namespace fractops;

namespace {
const AffineMap2 kFern2{0.06, 0.02, 0.45, 0.0, 0.165, 0.835};
const AffineMap2 kDragon1{0.5, -0.5, -1.0, 0.5, 0.5, 0.0};
}  // namespace

TEST_CASE("apply_map") {
  const Point2 p = apply_map(kFern2, {0.0, 0.0});
  CHECK(p.x == doctest::Approx(0.45).epsilon(1e-15));
  CHECK(p.y == doctest::Approx(0.835).epsilon(1e-15));
  CHECK(apply_map(AffineMap2{}, {0.3, 0.7}) == Point2{0.3, 0.7});
  CHECK(apply_map(kDragon1, {0.0, 0.0}) == Point2{-1.0, 0.0});
}

TEST_CASE("invert_map") {
  CHECK(invert_map(AffineMap2{}) == AffineMap2{});
  const AffineMap2 inv = invert_map({0.5, 0, 0, 0, 0.5, 0});
  CHECK(inv.a == 2.0);
  CHECK(inv.e == 2.0);
  CHECK(inv.c == 0.0);
  const Point2 back = apply_map(invert_map(kFern2), {0.45, 0.835});
  CHECK(std::abs(back.x) < 1e-12);
  CHECK(std::abs(back.y) < 1e-12);
  CHECK_THROWS_AS(invert_map({1, 2, 0, 2, 4, 0}), SingularMapError);
}

TEST_CASE("contraction_factor") {
  CHECK(contraction_factor({0.5, 0, 0, 0, 0.5, 0}) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(contraction_factor(kDragon1) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
  CHECK(contraction_factor({0.85, -0.05, 0, 0.05, 0.85, 0}) == doctest::Approx(std::sqrt(0.725)).epsilon(1e-14));
  // Shear: singular values of [[1, 1], [0, 1]] are golden-ratio related.
  CHECK(contraction_factor({1, 1, 0, 0, 1, 0}) == doctest::Approx((1.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-14));
}

TEST_CASE("compose and fixed_point agree with the linear-solve oracle") {
  const AffineMap2 fern1{0.85, -0.05, 0.125, 0.05, 0.85, -0.039};
  const Point2 p = fixed_point(fern1);
  const Point2 q = oracle::fixed_point(fern1);
  CHECK(distance(p, q) < 1e-12);
  CHECK(distance(apply_map(fern1, p), p) < 1e-12);

  const AffineMap2 both = compose(kFern2, fern1);
  for (Point2 x : {Point2{0.1, 0.2}, Point2{-3, 5}, Point2{0.7, 0.0}}) {
    CHECK(distance(apply_map(both, x), apply_map(kFern2, apply_map(fern1, x))) < 1e-12);
  }
}
