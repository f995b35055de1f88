#include <cmath>
#include <limits>
#include <random>

#include "doctest.h"
#include "fractops/attractor.hpp"
#include "fractops/error.hpp"
#include "fractops/gallery.hpp"
#include "fractops/raster.hpp"
#include "oracles.hpp"

using namespace fractops;

namespace {

Mask random_mask(const PixelGrid& g, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution on(density);
  Mask m(g);
  for (std::size_t k = 0; k < m.size(); ++k) m.set(k, on(rng));
  return m;
}

}  // namespace

TEST_CASE("pixel grid binning") {
  const PixelGrid g(4, 2, {{0, 0}, {2, 1}});
  CHECK(g.pitch_x() == 0.5);
  CHECK(g.pitch_y() == 0.5);
  CHECK(*g.locate({0.0, 0.0}) == g.index(0, 0));
  CHECK(*g.locate({0.5, 0.0}) == g.index(1, 0));
  CHECK(*g.locate({2.0, 1.0}) == g.index(3, 1));
  CHECK_FALSE(g.locate({2.0001, 0.5}).has_value());
  CHECK_FALSE(g.locate({std::nan(""), 0.5}).has_value());
  CHECK(g.center(1, 1) == Point2{0.75, 0.75});
  CHECK(*g.locate_within({-0.3, 1.2}, 1) == g.index(0, 1));
  CHECK_FALSE(g.locate_within({-0.6, 0.5}, 1).has_value());
}

TEST_CASE("hausdorff examples") {
  const PixelGrid g(10, 10, {{0, 0}, {10, 10}});
  Mask a(g), b(g);
  a.set(g.index(0, 0));
  b.set(g.index(3, 4));
  CHECK(hausdorff_pixels(a, a) == 0.0);
  CHECK(hausdorff_pixels(a, b) == doctest::Approx(5.0).epsilon(1e-14));
  CHECK(directed_hausdorff(a, b) == doctest::Approx(5.0).epsilon(1e-14));
  CHECK_THROWS_AS(hausdorff_pixels(a, Mask(g)), EmptyMaskError);
  CHECK_THROWS_AS(hausdorff_pixels(a, Mask(PixelGrid(5, 5, g.viewport()))), GridMismatchError);
}

TEST_CASE("hausdorff matches the brute-force oracle") {
  const PixelGrid g(37, 23, {{-1, 0}, {2, 1.5}});
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const Mask a = random_mask(g, 0.02 + 0.01 * static_cast<double>(seed), seed);
    const Mask b = random_mask(g, 0.05, seed + 100);
    if (!a.any() || !b.any()) continue;
    CHECK(hausdorff_pixels(a, b) == doctest::Approx(oracle::hausdorff(a, b)).epsilon(1e-12));
  }
}

TEST_CASE("distance transform matches brute force") {
  const PixelGrid g(19, 13, {{0, 0}, {1, 1}});
  const Mask m = random_mask(g, 0.04, 9);
  const auto d2 = squared_distance_transform(m);
  const auto centers = oracle::set_centers(m);
  for (std::size_t k = 0; k < m.size(); ++k) {
    double best = std::numeric_limits<double>::infinity();
    for (Point2 q : centers) {
      const Point2 p = g.center(k);
      best = std::min(best, (p.x - q.x) * (p.x - q.x) + (p.y - q.y) * (p.y - q.y));
    }
    REQUIRE(d2[k] == doctest::Approx(best).epsilon(1e-12));
  }
}

TEST_CASE("mask algebra and dilation") {
  const PixelGrid g(8, 8, {{0, 0}, {1, 1}});
  const Mask a = random_mask(g, 0.3, 1);
  const Mask b = random_mask(g, 0.3, 2);
  CHECK((a | b).count() + (a & b).count() == a.count() + b.count());
  CHECK(mask_difference(a, b).count() == a.count() - (a & b).count());

  Mask dot(g);
  dot.set(g.index(3, 3));
  CHECK(dilate(dot, 1).count() == 9);
  CHECK(dilate(dot, 2).count() == 25);
  Mask corner(g);
  corner.set(g.index(0, 0));
  CHECK(dilate(corner, 1).count() == 4);
}

TEST_CASE("mask membership") {
  const PixelGrid g(8, 8, {{0, 0}, {1, 1}});
  Mask m(g);
  m.set(g.index(2, 5));
  CHECK(mask_membership(m, g.center(2, 5), 0));
  CHECK_FALSE(mask_membership(m, g.center(3, 5), 0));
  CHECK(mask_membership(m, g.center(3, 6), 1));
  CHECK_FALSE(mask_membership(Mask(g), {0.5, 0.5}, 3));
  CHECK_FALSE(mask_membership(m, {5.0, 5.0}, 1));

  const Ifs fern = fern_ifs();
  const PixelGrid fg(256, 256, fern.viewport());
  const Mask fm = render_converged(fern, fg).mask;
  CHECK(mask_membership(fm, oracle::fixed_point(fern.map(2)), 1));
}

TEST_CASE("picture coverage") {
  const PixelGrid g(4, 4, {{0, 0}, {1, 1}});
  RasterPicture pic(g);
  pic.coverage[3] = 1;
  pic.pixels[3] = {1, 2, 3};
  CHECK(pic.covered_count() == 1);
  CHECK(pic.coverage_mask().count() == 1);
  CHECK(*pic.sample(g.center(3)) == Rgb{1, 2, 3});
  CHECK_FALSE(pic.sample(g.center(2)).has_value());
  CHECK(pack_rgb({1, 2, 3}) == 0x010203u);
}
