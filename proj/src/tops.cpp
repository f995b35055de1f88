#include "fractops/tops.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "fractops/error.hpp"

namespace fractops {

namespace {

std::string describe(Point2 x) { return "(" + std::to_string(x.x) + ", " + std::to_string(x.y) + ")"; }

}  // namespace

DomainPartition build_partition(const Ifs& ifs, const PixelGrid& grid, const PartitionOptions& options) {
  ConvergedOptions render_options;
  render_options.tolerance_pixels = options.tolerance_pixels;
  render_options.with_images = true;
  render_options.with_representatives = true;
  render_options.workers = options.workers;
  ConvergedRender render = render_converged(ifs, grid, render_options);

  const std::size_t n = ifs.size();
  std::vector<Mask> dilated;
  dilated.reserve(n);
  for (const auto& image : render.images) dilated.push_back(dilate(image, 1));

  std::vector<Mask> cells;
  Mask claimed(grid);
  for (const auto& image : render.images) {
    cells.push_back(mask_difference(image, claimed));
    claimed |= image;
  }

  std::vector<Symbol> labels(grid.pixel_count(), 0);
  for (std::size_t k = 0; k < labels.size(); ++k) {
    for (std::size_t s = 0; s < n; ++s) {
      if (dilated[s].test(k)) {
        labels[k] = static_cast<Symbol>(s + 1);
        break;
      }
    }
  }

  Mask boundary(grid);
  const int w = grid.width();
  const int h = grid.height();
  for (int j = 0; j < h; ++j) {
    for (int i = 0; i < w; ++i) {
      Symbol seen = 0;
      bool mixed = false;
      for (int dj = -1; dj <= 1 && !mixed; ++dj) {
        for (int di = -1; di <= 1; ++di) {
          const int ii = i + di;
          const int jj = j + dj;
          if (ii < 0 || jj < 0 || ii >= w || jj >= h) continue;
          const Symbol s = labels[grid.index(ii, jj)];
          if (s == 0) continue;
          if (seen == 0) {
            seen = s;
          } else if (s != seen) {
            mixed = true;
            break;
          }
        }
      }
      if (mixed) boundary.set(grid.index(i, j));
    }
  }

  Mask reach = dilate(render.mask, 1);
  return DomainPartition{ifs,
                         grid,
                         std::move(render.mask),
                         std::move(render.images),
                         std::move(dilated),
                         std::move(cells),
                         std::move(labels),
                         std::move(boundary),
                         std::move(render.representatives),
                         std::move(reach),
                         std::max(1, options.lookahead)};
}

namespace {

bool on_attractor(const DomainPartition& part, Point2 p) {
  auto k = part.grid.locate_within(p, 1);
  return k && part.dilated_attractor.test(*k);
}

// Some backward path of `steps` maps, the first being f_n^{-1}, keeps x on the attractor.
bool admits(const DomainPartition& part, Symbol n, Point2 x, int steps) {
  const Point2 p = apply_map(part.ifs.inverse(n), x);
  if (!on_attractor(part, p)) return false;
  if (steps <= 1) return true;
  for (Symbol m = 1; m <= part.ifs.size(); ++m) {
    if (admits(part, m, p, steps - 1)) return true;
  }
  return false;
}

// Symbol 0 when x is off the attractor.
TopsStep choose(const DomainPartition& part, Point2 x) {
  const Symbol label = part.label_at(x);
  if (label == 0) return {0, x, false};
  const auto k = *part.grid.locate_within(x, 1);
  Symbol chosen = 0;
  for (Symbol n = label; n <= part.ifs.size(); ++n) {
    if (!part.dilated_images[n - 1].test(k) || !admits(part, n, x, part.lookahead)) continue;
    if (chosen != 0) return {chosen, apply_map(part.ifs.inverse(chosen), x), true};
    chosen = n;
  }
  if (chosen == 0) return {label, apply_map(part.ifs.inverse(label), x), true};
  return {chosen, apply_map(part.ifs.inverse(chosen), x), false};
}

}  // namespace

TopsStep tops_step(const DomainPartition& part, Point2 x) {
  const TopsStep step = choose(part, x);
  if (step.symbol == 0) throw OffAttractorError("point " + describe(x) + " is not on the attractor");
  return step;
}

Itinerary tops_orbit(const DomainPartition& part, Point2 x, int depth) {
  if (depth < 0) throw ValidationError("orbit depth must be non-negative");
  Itinerary it;
  it.terminal = x;
  std::vector<Symbol> symbols;
  symbols.reserve(static_cast<std::size_t>(depth));
  for (int k = 0; k < depth; ++k) {
    const TopsStep step = choose(part, x);
    if (step.symbol == 0) {
      if (k == 0) throw OffAttractorError("point " + describe(x) + " is not on the attractor");
      it.complete = false;
      break;
    }
    if (step.ambiguous) it.boundary_flag = true;
    symbols.push_back(step.symbol);
    x = step.next;
    it.terminal = x;
  }
  it.prefix = AddressPrefix(std::move(symbols));
  return it;
}

namespace {

struct Branch {
  std::vector<Symbol> symbols;
  Point2 point;
};

template <class Holds>
AddressSet backwards_orbits(const Ifs& ifs, Point2 x, int depth, std::size_t max_count, Holds&& holds) {
  if (depth < 0) throw ValidationError("enumeration depth must be non-negative");
  if (max_count == 0) throw ValidationError("branch cap must be at least 1");
  AddressSet out;
  std::vector<Branch> frontier{Branch{{}, x}};
  for (int k = 0; k < depth; ++k) {
    std::vector<Branch> next;
    for (const auto& branch : frontier) {
      for (Symbol s = 1; s <= ifs.size(); ++s) {
        if (!holds(s, branch.point)) continue;
        if (next.size() == max_count) {
          out.truncated = true;
          break;
        }
        Branch grown{branch.symbols, apply_map(ifs.inverse(s), branch.point)};
        grown.symbols.push_back(s);
        next.push_back(std::move(grown));
      }
    }
    if (next.empty()) {
      throw OffAttractorError(k == 0 ? "point " + describe(x) + " is not on the attractor"
                                     : "every backwards orbit of " + describe(x) + " left the attractor");
    }
    frontier = std::move(next);
  }
  out.prefixes.reserve(frontier.size());
  for (auto& branch : frontier) out.prefixes.emplace_back(std::move(branch.symbols));
  return out;
}

}  // namespace

AddressSet enumerate_addresses(const Ifs& ifs, std::span<const Mask> image_masks, Point2 x, int depth,
                               std::size_t max_count, int dilation) {
  if (image_masks.size() != ifs.size()) throw ValidationError("need one image mask per map");
  return backwards_orbits(ifs, x, depth, max_count,
                          [&](Symbol s, Point2 p) { return mask_membership(image_masks[s - 1], p, dilation); });
}

AddressSet enumerate_addresses(const DomainPartition& part, Point2 x, int depth, std::size_t max_count) {
  return backwards_orbits(part.ifs, x, depth, max_count, [&](Symbol s, Point2 p) {
    auto k = part.grid.locate_within(p, 1);
    return k && part.dilated_images[s - 1].test(*k);
  });
}

double shift_complexity(const DomainPartition& part, std::size_t samples, int depth, std::uint64_t seed) {
  if (samples == 0 || depth < 1) throw ValidationError("shift complexity needs samples >= 1 and depth >= 1");
  std::set<std::vector<Symbol>> words;
  for (Point2 x : sample_attractor(part.ifs, samples, seed)) {
    if (part.label_at(x) == 0) continue;
    Itinerary it = tops_orbit(part, x, depth);
    if (!it.complete) continue;
    auto s = it.prefix.symbols();
    words.emplace(s.begin(), s.end());
  }
  if (words.empty()) return 0.0;
  return std::log(static_cast<double>(words.size())) / depth;
}

}  // namespace fractops
