#include "fractops/attractor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include <omp.h>

#include "fractops/error.hpp"
#include "fractops/prng.hpp"
#include "render_detail.hpp"

namespace fractops {

PhiResult phi_eval(const Ifs& ifs, const AddressPrefix& p, std::optional<Point2> x0) {
  Point2 x = x0.value_or(ifs.viewport().center());
  const auto symbols = p.symbols();
  for (std::size_t k = symbols.size(); k-- > 0;) {
    const Symbol s = symbols[k];
    if (s < 1 || s > ifs.size()) throw ValidationError("address symbol outside the IFS alphabet");
    x = apply_map(ifs.map(s), x);
  }
  const double radius =
      std::pow(ifs.contraction(), static_cast<double>(symbols.size())) * ifs.viewport().diameter();
  return {x, radius};
}

int required_depth(const Ifs& ifs, const PixelGrid& grid) {
  const double ratio = grid.pitch() / ifs.viewport().diameter();
  if (ratio >= 1.0) return 0;
  return static_cast<int>(std::ceil(std::log(ratio) / std::log(ifs.contraction())));
}

namespace {

void plot_compositions(const Ifs& ifs, Point2 x, int remaining, Mask& mask) {
  if (remaining == 0) {
    mask.plot(x);
    return;
  }
  for (const AffineMap2& m : ifs.maps()) plot_compositions(ifs, apply_map(m, x), remaining - 1, mask);
}

}  // namespace

AttractorMask render_deterministic(const Ifs& ifs, int depth, const PixelGrid& grid) {
  if (depth < 0) throw ValidationError("render depth must be non-negative");
  const double points = std::pow(static_cast<double>(ifs.size()), depth);
  if (points > kRenderBudget) {
    const int needed = required_depth(ifs, grid);
    throw BudgetExceededError("N^K = " + std::to_string(points) + " exceeds the 1e8 point budget; pixel "
                                  "convergence needs K = " + std::to_string(needed),
                              needed);
  }
  Mask mask(grid);
  plot_compositions(ifs, ifs.viewport().center(), depth, mask);
  return mask;
}

Point2 attractor_anchor(const Ifs& ifs) { return fixed_point(ifs.map(1)); }

namespace {

Rect map_box(const AffineMap2& m, const Rect& r) {
  const Point2 c = apply_map(m, r.center());
  const double hw = 0.5 * r.width();
  const double hh = 0.5 * r.height();
  const double rx = std::abs(m.a) * hw + std::abs(m.b) * hh;
  const double ry = std::abs(m.d) * hw + std::abs(m.e) * hh;
  return {{c.x - rx, c.y - ry}, {c.x + rx, c.y + ry}};
}

}  // namespace

Rect attractor_box(const Ifs& ifs) {
  const Point2 anchor = attractor_anchor(ifs);
  double bound = 0.0;
  for (std::size_t n = 0; n < ifs.size(); ++n) {
    bound = std::max(bound, distance(apply_map(ifs.maps()[n], anchor), anchor) / (1.0 - ifs.factors()[n]));
  }
  // The disc of radius `bound` about the anchor is mapped into itself, and so
  // is every box produced below; each therefore contains the attractor.
  Rect box{{anchor.x - bound, anchor.y - bound}, {anchor.x + bound, anchor.y + bound}};
  // Compositions of a fixed depth shrink a box far more than single maps do.
  std::vector<AffineMap2> words{AffineMap2{}};
  while (ifs.size() > 1 && words.size() * ifs.size() <= 4096) {
    std::vector<AffineMap2> longer;
    longer.reserve(words.size() * ifs.size());
    for (const auto& w : words) {
      for (const auto& m : ifs.maps()) longer.push_back(compose(w, m));
    }
    words = std::move(longer);
  }
  if (words.size() == 1) words.assign(ifs.maps().begin(), ifs.maps().end());
  for (int iter = 0; iter < 200; ++iter) {
    Rect next = map_box(words[0], box);
    for (std::size_t n = 1; n < words.size(); ++n) {
      const Rect r = map_box(words[n], box);
      next = {{std::min(next.min.x, r.min.x), std::min(next.min.y, r.min.y)},
              {std::max(next.max.x, r.max.x), std::max(next.max.y, r.max.y)}};
    }
    next = {{std::max(next.min.x, box.min.x), std::max(next.min.y, box.min.y)},
            {std::min(next.max.x, box.max.x), std::min(next.max.y, box.max.y)}};
    const bool settled = next == box;
    box = next;
    if (settled) break;
  }
  return box;
}

double attractor_radius(const Ifs& ifs) {
  const Point2 anchor = attractor_anchor(ifs);
  const Rect box = attractor_box(ifs);
  double r = 0.0;
  for (Point2 corner : {box.min, box.max, Point2{box.min.x, box.max.y}, Point2{box.max.x, box.min.y}}) {
    r = std::max(r, distance(corner, anchor));
  }
  return r;
}

namespace detail {

bool closer_to(Point2 p, Point2 q, Point2 c) {
  const double dp = (p.x - c.x) * (p.x - c.x) + (p.y - c.y) * (p.y - c.y);
  const double dq = (q.x - c.x) * (q.x - c.x) + (q.y - c.y) * (q.y - c.y);
  if (dp != dq) return dp < dq;
  if (p.x != q.x) return p.x < q.x;
  return p.y < q.y;
}

double leaf_tolerance(const PixelGrid& grid, const ConvergedOptions& options) {
  if (!(options.tolerance_pixels > 0.0)) throw ValidationError("render tolerance must be positive");
  return options.tolerance_pixels * std::min(grid.pitch_x(), grid.pitch_y());
}

Node child(const Node& node, const Ifs& ifs, Symbol s) {
  Node out{compose(node.map, ifs.map(s)), node.depth == 0 ? s : node.first, node.depth + 1, node.band + 1};
  const double det = std::abs(out.map.determinant());
  if (det > 0.0) out.band = std::max(out.band, static_cast<int>(std::floor(-2.0 * std::log2(det))));
  return out;
}

Walk::Walk(const Ifs& ifs_, const PixelGrid& grid_, double tol_)
    : ifs(ifs_), grid(grid_), tol(tol_), box(attractor_box(ifs_)), anchor(attractor_anchor(ifs_)) {}

Visit Walk::visit(const Node& node, const std::vector<Mask>& images) const {
  Visit out;
  const Rect sub = map_box(node.map, box);
  const Rect& view = grid.viewport();
  if (sub.max.x < view.min.x || sub.min.x > view.max.x || sub.max.y < view.min.y || sub.min.y > view.max.y) {
    return out;
  }
  out.point = apply_map(node.map, anchor);
  if (auto k = grid.locate(out.point)) {
    out.pixel = *k;
    out.plotted = true;
  }
  if (node.depth == 0) {
    out.fate = Fate::Expand;
    return out;
  }

  auto column = [&](double x) {
    return std::clamp(static_cast<int>(std::floor((x - view.min.x) / grid.pitch_x())), 0, grid.width() - 1);
  };
  auto row = [&](double y) {
    return std::clamp(static_cast<int>(std::floor((y - view.min.y) / grid.pitch_y())), 0, grid.height() - 1);
  };
  const PixelSpan span{column(sub.min.x), column(sub.max.x), row(sub.min.y), row(sub.max.y)};

  const bool inside = view.contains(sub.min) && view.contains(sub.max);
  const bool one_pixel = inside && span.i0 == span.i1 && span.j0 == span.j1;
  if (one_pixel || std::hypot(sub.width(), sub.height()) <= tol || node.depth >= kMaxNodeDepth) {
    out.fate = Fate::Leaf;
    return out;
  }

  const Mask& seen = images[node.first - 1];
  for (int j = span.j0; j <= span.j1; ++j) {
    for (int i = span.i0; i <= span.i1; ++i) {
      if (!seen.test(i, j)) {
        out.fate = Fate::Expand;
        return out;
      }
    }
  }
  out.fate = Fate::Covered;
  return out;
}

}  // namespace detail

ConvergedRender render_converged(const Ifs& ifs, const PixelGrid& grid, const ConvergedOptions& options) {
  const detail::Walk walk(ifs, grid, detail::leaf_tolerance(grid, options));
  const int workers = std::max(1, options.workers);
  const double nan = std::numeric_limits<double>::quiet_NaN();

  ConvergedRender out{Mask(grid), std::vector<Mask>(ifs.size(), Mask(grid)), {}, 0};
  std::vector<Point2> reps(grid.pixel_count(), Point2{nan, nan});

  struct Hit {
    std::size_t pixel;
    Point2 point;
    Symbol first;
  };
  struct Local {
    std::vector<detail::Node> next;
    std::vector<Hit> hits;
  };
  std::vector<Local> locals(static_cast<std::size_t>(workers));

  // Nodes are taken one band at a time and judged against the masks as they
  // stood before the band, so the result does not depend on scheduling.
  std::map<int, std::vector<detail::Node>> pending;
  pending[0].push_back(detail::Node{});
  while (!pending.empty()) {
    const std::vector<detail::Node> level = std::move(pending.begin()->second);
    pending.erase(pending.begin());
    out.leaves += level.size();
#pragma omp parallel num_threads(workers)
    {
      Local& local = locals[static_cast<std::size_t>(omp_get_thread_num())];
      local.next.clear();
      local.hits.clear();
#pragma omp for schedule(static)
      for (std::size_t k = 0; k < level.size(); ++k) {
        const detail::Node& node = level[k];
        const detail::Visit v = walk.visit(node, out.images);
        if (v.plotted && node.depth > 0) local.hits.push_back({v.pixel, v.point, node.first});
        if (v.fate != detail::Fate::Expand) continue;
        for (Symbol s = 1; s <= ifs.size(); ++s) local.next.push_back(detail::child(node, ifs, s));
      }
    }
    for (Local& local : locals) {
      for (const Hit& h : local.hits) {
        out.images[h.first - 1].set(h.pixel);
        Point2& rep = reps[h.pixel];
        if (std::isnan(rep.x) || detail::closer_to(h.point, rep, grid.center(h.pixel))) rep = h.point;
      }
      for (const detail::Node& node : local.next) pending[node.band].push_back(node);
      std::vector<detail::Node>().swap(local.next);
    }
  }

  for (const Mask& image : out.images) out.mask |= image;
  if (options.with_representatives) out.representatives = std::move(reps);
  if (!options.with_images) out.images.clear();
  return out;
}

std::uint64_t worker_share(std::uint64_t total, int workers, int w) {
  const auto count = static_cast<std::uint64_t>(workers);
  const std::uint64_t base = total / count;
  return base + (static_cast<std::uint64_t>(w) < total % count ? 1 : 0);
}

AttractorMask render_chaos(const Ifs& ifs, const ChaosOptions& options, const PixelGrid& grid) {
  const int workers = std::max(1, options.workers);
  const SymbolSelector select(ifs.probabilities());
  std::vector<Mask> partial(workers, Mask(grid));

#pragma omp parallel for num_threads(workers) schedule(static, 1)
  for (int w = 0; w < workers; ++w) {
    Prng rng(stream_seed(options.seed, static_cast<unsigned>(w)));
    Mask& mask = partial[w];
    Point2 x = ifs.viewport().center();
    const std::uint64_t steps = worker_share(options.iterations, workers, w);
    const auto burn_in = static_cast<std::uint64_t>(std::max(0, options.burn_in));
    for (std::uint64_t k = 1; k <= steps; ++k) {
      x = apply_map(ifs.map(select(rng.next())), x);
      if (k > burn_in) mask.plot(x);
    }
  }

  Mask out = std::move(partial[0]);
  for (int w = 1; w < workers; ++w) out |= partial[w];
  return out;
}

std::vector<Point2> sample_attractor(const Ifs& ifs, std::size_t count, std::uint64_t seed, int depth) {
  Prng rng(seed);
  const Point2 anchor = attractor_anchor(ifs);
  const auto n = static_cast<std::uint64_t>(ifs.size());
  std::vector<Symbol> word(static_cast<std::size_t>(std::max(0, depth)));
  std::vector<Point2> out;
  out.reserve(count);
  for (std::size_t s = 0; s < count; ++s) {
    for (auto& sym : word) sym = static_cast<Symbol>(1 + (rng.next() >> 32) * n / (std::uint64_t{1} << 32));
    out.push_back(phi_eval(ifs, AddressPrefix(word), anchor).point);
  }
  return out;
}

}  // namespace fractops
