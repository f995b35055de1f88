#include <cmath>
#include <string>
#include <vector>

#include "doctest.h"
#include "fractops/attractor.hpp"
#include "fractops/error.hpp"
#include "fractops/gallery.hpp"
#include "fractops/reference.hpp"
#include "oracles.hpp"

using namespace fractops;

namespace {

std::vector<AffineMap2> maps_of(const Ifs& ifs) { return {ifs.maps().begin(), ifs.maps().end()}; }

/// Chaos game written out longhand with the oracle generator.
Mask chaos_oracle(const Ifs& ifs, std::uint64_t iterations, std::uint64_t seed, int burn_in, const PixelGrid& grid) {
  std::vector<double> cumulative;
  double acc = 0.0;
  for (double p : ifs.probabilities()) cumulative.push_back(acc += p);
  cumulative.back() = 1.0;
  Mask out(grid);
  std::uint64_t state = seed;
  Point2 x = ifs.viewport().center();
  for (std::uint64_t k = 1; k <= iterations; ++k) {
    const double u = static_cast<double>(oracle::splitmix64(state) >> 11) * 0x1.0p-53;
    std::size_t n = 0;
    while (n + 1 < cumulative.size() && !(cumulative[n] > u)) ++n;
    x = oracle::apply(ifs.maps()[n], x);
    if (k > static_cast<std::uint64_t>(burn_in)) out.plot(x);
  }
  return out;
}

}  // namespace

TEST_CASE("phi_eval against the linear-solve oracle") {
  const Ifs fern = fern_ifs();
  const auto maps = maps_of(fern);
  const PhiResult ones = phi_eval(fern, AddressPrefix::repeated(1, 60));
  CHECK(distance(ones.point, oracle::fixed_point(maps[0])) <= ones.error_radius);
  CHECK(ones.point.x == doctest::Approx(0.828).epsilon(1e-3));
  CHECK(std::abs(ones.point.y - 0.016) < 1e-3);

  const PhiResult twos = phi_eval(fern, AddressPrefix::repeated(2, 60));
  CHECK(distance(twos.point, {0.5, 1.0}) < 1e-3);
  CHECK(distance(twos.point, oracle::fixed_point(maps[1])) <= twos.error_radius);

  const PhiResult junction = phi_eval(fern, concat(AddressPrefix::parse("1"), AddressPrefix::repeated(2, 60)));
  CHECK(distance(junction.point, {0.5, 0.836}) < 2e-3);
  CHECK(distance(junction.point, oracle::eventually_constant(maps, "1", '2')) < 1e-12);

  const Ifs dragon = gallery_ifs("dragon:0.5,0.5");
  const PhiResult d = phi_eval(dragon, AddressPrefix::repeated(1, 60));
  CHECK(distance(d.point, {-1.0, -1.0}) <= d.error_radius);
  CHECK(distance(d.point, {-1.0, -1.0}) < 2e-9);

  CHECK(phi_eval(fern, AddressPrefix(), Point2{0.2, 0.3}).point == Point2{0.2, 0.3});
  CHECK_THROWS_AS(phi_eval(fern, AddressPrefix::parse("5")), ValidationError);
}

TEST_CASE("phi_eval error radius bounds the distance to the limit point") {
  const Ifs tri = gallery_ifs("tri:0.4,0.6,0.475");
  const auto maps = maps_of(tri);
  for (const char* head : {"", "3", "2413", "4444", "12"}) {
    for (char tail : {'1', '2', '3', '4'}) {
      const Point2 exact = oracle::eventually_constant(maps, head, tail);
      for (std::size_t reps : {4u, 10u, 30u}) {
        std::string word = head;
        word.append(reps, tail);
        const PhiResult r = phi_eval(tri, AddressPrefix::parse(word));
        REQUIRE(distance(r.point, exact) <= r.error_radius + 1e-12);
      }
    }
  }
}

TEST_CASE("phi_eval recursion and seed dependence") {
  std::uint64_t state = 11;
  auto uniform = [&] { return static_cast<double>(oracle::splitmix64(state) >> 11) * 0x1.0p-53; };
  for (std::string name : {"fern", "tri:0.4,0.6,0.475", "dragon:0.5,0.5"}) {
    CAPTURE(name);
    const Ifs ifs = gallery_ifs(name);
    const double l = ifs.contraction();
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<Symbol> symbols(static_cast<std::size_t>(trial % 25));
      for (auto& s : symbols) s = static_cast<Symbol>(1 + oracle::splitmix64(state) % ifs.size());
      const AddressPrefix p(symbols);
      const Point2 x0{uniform() * 4 - 2, uniform() * 4 - 2}, x1{uniform() * 4 - 2, uniform() * 4 - 2};
      const Symbol n = static_cast<Symbol>(1 + trial % ifs.size());
      // Prepending a symbol applies its map to the shorter evaluation, bit for bit.
      REQUIRE(phi_eval(ifs, concat(AddressPrefix({n}), p), x0).point == apply_map(ifs.map(n), phi_eval(ifs, p, x0).point));
      const double gap = distance(phi_eval(ifs, p, x0).point, phi_eval(ifs, p, x1).point);
      REQUIRE(gap <= std::pow(l, static_cast<double>(p.size())) * distance(x0, x1) + 1e-12);
    }
  }
}

TEST_CASE("deterministic render") {
  const Ifs tri = gallery_ifs("tri:0.5,0.5,0.5");
  const PixelGrid g(64, 64, tri.viewport());
  Mask expect(g);
  oracle::plot_words(maps_of(tri), 6, tri.viewport().center(), expect);
  CHECK(render_deterministic(tri, 6, g) == expect);

  const int k = required_depth(tri, g);
  CHECK(std::pow(tri.contraction(), k) * tri.viewport().diameter() <= g.pitch());
  CHECK(hausdorff_pixels(render_deterministic(tri, k, g), render_deterministic(tri, k + 1, g)) <= g.pitch());

  const Ifs one = validate_hyperbolic({{0.5, 0, 0.2, 0, 0.5, 0.3}}, std::nullopt, {{0, 0}, {1, 1}});
  CHECK(render_deterministic(one, 60, PixelGrid(32, 32, one.viewport())).count() == 1);

  CHECK_THROWS_AS(render_deterministic(tri, 14, g), BudgetExceededError);
  try {
    render_deterministic(tri, 14, g);
  } catch (const BudgetExceededError& e) {
    CHECK(e.required_depth() == k);
  }
}

TEST_CASE("filled triangle at depth 10") {
  const Ifs tri = gallery_ifs("tri:0.5,0.5,0.5");
  const PixelGrid g(256, 256, tri.viewport());
  const Mask near = dilate(render_deterministic(tri, 10, g), 1);
  std::size_t inside = 0;
  for (std::size_t k = 0; k < g.pixel_count(); ++k) {
    const Point2 c = g.center(k);
    // Strictly inside the triangle (0,0), (1,0), (0.5,1) by a pixel margin.
    const double m = 2.0 * g.pitch();
    if (c.y > m && c.y < 2.0 * c.x - 2.0 * m && c.y < 2.0 - 2.0 * c.x - 2.0 * m) {
      ++inside;
      REQUIRE(near.test(k));
    }
  }
  CHECK(inside > 20000);
}

TEST_CASE("chaos game") {
  const Ifs fern = fern_ifs();
  const PixelGrid g(128, 128, fern.viewport());
  const ChaosOptions opts{200000, 7, 100, 1};
  const Mask m = render_chaos(fern, opts, g);
  CHECK(m == chaos_oracle(fern, 200000, 7, 100, g));
  CHECK(m == render_chaos(fern, opts, g));
  CHECK_FALSE(render_chaos(fern, {100, 7, 100, 1}, g).any());
  CHECK(worker_share(10, 3, 0) + worker_share(10, 3, 1) + worker_share(10, 3, 2) == 10);
}

TEST_CASE("chaos kernels: OpenMP equals the serial reference") {
  const Ifs fern = fern_ifs();
  const PixelGrid g(200, 200, fern.viewport());
  for (int workers : {1, 2, 3, 4}) {
    const ChaosOptions opts{300000, 3, 100, workers};
    CHECK(render_chaos(fern, opts, g) == reference::render_chaos_serial(fern, opts, g));
  }
}

TEST_CASE("converged render invariants") {
  for (std::string name : {"fern", "tri:0.65,0.3,0.4", "dragon:0.44,0.44", "square-disc"}) {
    CAPTURE(name);
    const Ifs ifs = gallery_ifs(name);
    const PixelGrid g(128, 128, ifs.viewport());
    ConvergedOptions opts;
    opts.with_images = true;
    opts.with_representatives = true;
    const ConvergedRender r = render_converged(ifs, g, opts);
    REQUIRE(r.images.size() == ifs.size());

    Mask unioned(g);
    for (const auto& image : r.images) unioned |= image;
    CHECK(unioned == r.mask);

    // Each image is the attractor mapped by one member.
    for (Symbol s = 1; s <= ifs.size(); ++s) {
      Mask mapped(g);
      for (std::size_t k = 0; k < g.pixel_count(); ++k) {
        if (r.mask.test(k)) mapped.plot(apply_map(ifs.map(s), r.representatives[k]));
      }
      if (mapped.any()) CHECK(directed_hausdorff(mapped, r.images[s - 1]) <= 2.0 * g.pitch());
    }

    for (std::size_t k = 0; k < g.pixel_count(); ++k) {
      const Point2 p = r.representatives[k];
      if (r.mask.test(k)) {
        REQUIRE(g.locate(p) == k);
      } else {
        REQUIRE(std::isnan(p.x));
      }
    }

    const Mask chaos = render_chaos(ifs, {2000000, 1, 100, 1}, g);
    CHECK(hausdorff_pixels(chaos, r.mask) <= 2.0 * g.pitch());
  }
}

TEST_CASE("converged kernels: OpenMP equals the serial reference") {
  for (std::string name : {"fern", "tri:0.5,0.5,0.5", "dragon:0.5,0.5"}) {
    CAPTURE(name);
    const Ifs ifs = gallery_ifs(name);
    const PixelGrid g(160, 160, ifs.viewport());
    ConvergedOptions opts;
    opts.with_images = true;
    opts.with_representatives = true;
    const ConvergedRender serial = reference::render_converged_serial(ifs, g, opts);
    for (int workers : {1, 3}) {
      opts.workers = workers;
      const ConvergedRender par = render_converged(ifs, g, opts);
      CHECK(par.mask == serial.mask);
      CHECK(par.images == serial.images);
      CHECK(par.leaves == serial.leaves);
      bool same = true;
      for (std::size_t k = 0; k < g.pixel_count(); ++k) {
        const Point2 a = par.representatives[k], b = serial.representatives[k];
        same = same && (std::isnan(a.x) ? std::isnan(b.x) : a == b);
      }
      CHECK(same);
    }
  }
}

TEST_CASE("attractor box and samples") {
  for (std::string name : {"fern", "square-cts", "tri:0.4,0.6,0.475", "dragon:0.535,0.535"}) {
    CAPTURE(name);
    const Ifs ifs = gallery_ifs(name);
    const Rect box = attractor_box(ifs);
    const double r = attractor_radius(ifs);
    const Point2 anchor = attractor_anchor(ifs);
    CHECK(distance(apply_map(ifs.map(1), anchor), anchor) < 1e-12);
    const auto pts = sample_attractor(ifs, 2000, 5);
    CHECK(pts.size() == 2000);
    for (Point2 p : pts) {
      REQUIRE(box.contains(p));
      REQUIRE(distance(p, anchor) <= r + 1e-12);
    }
    CHECK(sample_attractor(ifs, 10, 5) == std::vector<Point2>(pts.begin(), pts.begin() + 10));
  }
}
