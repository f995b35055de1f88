#include <cmath>
#include <limits>
#include <map>

#include "fractops/error.hpp"
#include "fractops/prng.hpp"
#include "fractops/reference.hpp"
#include "../render_detail.hpp"

namespace fractops::reference {

AttractorMask render_chaos_serial(const Ifs& ifs, const ChaosOptions& options, const PixelGrid& grid) {
  const int workers = std::max(1, options.workers);
  const SymbolSelector select(ifs.probabilities());
  Mask out(grid);
  for (int w = 0; w < workers; ++w) {
    Prng rng(stream_seed(options.seed, static_cast<unsigned>(w)));
    Point2 x = ifs.viewport().center();
    const std::uint64_t steps = worker_share(options.iterations, workers, w);
    for (std::uint64_t k = 1; k <= steps; ++k) {
      x = apply_map(ifs.map(select(rng.next())), x);
      if (k > static_cast<std::uint64_t>(std::max(0, options.burn_in))) out.plot(x);
    }
  }
  return out;
}

ConvergedRender render_converged_serial(const Ifs& ifs, const PixelGrid& grid, const ConvergedOptions& options) {
  const detail::Walk walk(ifs, grid, detail::leaf_tolerance(grid, options));
  const double nan = std::numeric_limits<double>::quiet_NaN();
  ConvergedRender out{Mask(grid), std::vector<Mask>(ifs.size(), Mask(grid)), {}, 0};
  std::vector<Point2> reps(grid.pixel_count(), Point2{nan, nan});

  std::map<int, std::vector<detail::Node>> pending;
  pending[0].push_back(detail::Node{});
  while (!pending.empty()) {
    const std::vector<detail::Node> level = std::move(pending.begin()->second);
    pending.erase(pending.begin());
    out.leaves += level.size();
    std::vector<detail::Visit> visits;
    visits.reserve(level.size());
    for (const auto& node : level) visits.push_back(walk.visit(node, out.images));
    for (std::size_t k = 0; k < level.size(); ++k) {
      const detail::Node& node = level[k];
      const detail::Visit& v = visits[k];
      if (v.plotted && node.depth > 0) {
        out.images[node.first - 1].set(v.pixel);
        Point2& rep = reps[v.pixel];
        if (std::isnan(rep.x) || detail::closer_to(v.point, rep, grid.center(v.pixel))) rep = v.point;
      }
      if (v.fate != detail::Fate::Expand) continue;
      for (Symbol s = 1; s <= ifs.size(); ++s) {
        detail::Node c = detail::child(node, ifs, s);
        pending[c.band].push_back(c);
      }
    }
  }

  for (const Mask& image : out.images) out.mask |= image;
  if (options.with_representatives) out.representatives = std::move(reps);
  if (!options.with_images) out.images.clear();
  return out;
}

RasterPicture transform_picture_serial(const DomainPartition& part_f, const Ifs& G, const RasterPicture& picture_g,
                                       int depth) {
  const PixelGrid& grid = part_f.grid;
  RasterPicture out(grid);
  for (std::size_t k = 0; k < grid.pixel_count(); ++k) {
    if (!part_f.attractor.test(k)) continue;
    Point2 x = part_f.representatives[k];
    if (std::isnan(x.x)) x = grid.center(k);
    try {
      const Point2 y = transform_point(part_f, G, x, depth).point;
      if (auto c = picture_g.sample(y)) {
        out.pixels[k] = *c;
        out.coverage[k] = 1;
      }
    } catch (const OffAttractorError&) {
    }
  }
  return out;
}

}  // namespace fractops::reference
