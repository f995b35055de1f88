#include "fractops/transform.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <unordered_map>

#include "fractops/attractor.hpp"
#include "fractops/error.hpp"
#include "fractops/prng.hpp"

namespace fractops {

TopsCanvas::TopsCanvas(PixelGrid grid, std::size_t depth)
    : grid_(grid),
      depth_(depth),
      keys_(grid.pixel_count() * depth, Symbol{1}),
      present_(grid.pixel_count(), 0),
      colored_(grid.pixel_count(), 0),
      colors_(grid.pixel_count(), Rgb{0, 0, 0}),
      g_points_(grid.pixel_count()) {
  if (depth == 0) throw ValidationError("tops canvas depth must be >= 1");
}

bool TopsCanvas::offer(std::size_t pixel, std::span<const Symbol> key, Rgb color, bool colored, Point2 g_point) {
  Symbol* stored = keys_.data() + pixel * depth_;
  if (present_[pixel]) {
    // A padded key is tops-greater exactly when it is byte-wise smaller.
    const int order = std::memcmp(key.data(), stored, depth_);
    if (order > 0) return false;
    if (order == 0) {
      const auto mine = std::make_tuple(colored, pack_rgb(color), g_point.x, g_point.y);
      const auto theirs = std::make_tuple(colored_[pixel] != 0, pack_rgb(colors_[pixel]), g_points_[pixel].x,
                                          g_points_[pixel].y);
      if (!(mine > theirs)) return false;
    }
    ++replacements_;
  }
  std::memcpy(stored, key.data(), depth_);
  present_[pixel] = 1;
  colored_[pixel] = colored ? 1 : 0;
  colors_[pixel] = color;
  g_points_[pixel] = g_point;
  return true;
}

void TopsCanvas::merge(const TopsCanvas& other) {
  if (!(other.grid_ == grid_) || other.depth_ != depth_) throw GridMismatchError("tops canvases differ in shape");
  for (std::size_t k = 0; k < present_.size(); ++k) {
    if (other.present_[k]) offer(k, other.key(k), other.colors_[k], other.colored_[k] != 0, other.g_points_[k]);
  }
  replacements_ += other.replacements_;
}

std::size_t TopsCanvas::records() const {
  return static_cast<std::size_t>(std::count(present_.begin(), present_.end(), std::uint8_t{1}));
}

RasterPicture TopsCanvas::picture() const {
  RasterPicture out(grid_);
  for (std::size_t k = 0; k < present_.size(); ++k) {
    if (present_[k] && colored_[k]) {
      out.coverage[k] = 1;
      out.pixels[k] = colors_[k];
    }
  }
  return out;
}

bool operator==(const TopsCanvas& a, const TopsCanvas& b) {
  if (!(a.grid_ == b.grid_) || a.depth_ != b.depth_ || a.present_ != b.present_) return false;
  for (std::size_t k = 0; k < a.present_.size(); ++k) {
    if (!a.present_[k]) continue;
    if (!std::equal(a.key(k).begin(), a.key(k).end(), b.key(k).begin())) return false;
    if (a.colored_[k] != b.colored_[k] || a.colors_[k] != b.colors_[k] || !(a.g_points_[k] == b.g_points_[k])) {
      return false;
    }
  }
  return true;
}

double coverage_of(const RasterPicture& picture, const Mask& attractor) {
  if (!(picture.grid == attractor.grid())) throw GridMismatchError("picture and attractor grids differ");
  std::size_t total = 0;
  std::size_t hit = 0;
  for (std::size_t k = 0; k < attractor.size(); ++k) {
    if (!attractor.test(k)) continue;
    ++total;
    hit += picture.coverage[k] != 0;
  }
  return total == 0 ? 0.0 : static_cast<double>(hit) / static_cast<double>(total);
}

StealResult color_steal(const Ifs& F, const Ifs& G, const RasterPicture& picture_g, const PixelGrid& grid_f,
                        const StealOptions& options) {
  if (F.size() != G.size()) throw ValidationError("color stealing needs IFSs with equal map counts");
  const int orbits = std::max(1, options.orbits);
  const int workers = std::max(1, std::min(options.workers, orbits));
  const SymbolSelector select(F.probabilities());
  const auto burn_in = static_cast<std::uint64_t>(std::max(0, options.burn_in));

  std::vector<TopsCanvas> canvases(orbits, TopsCanvas(grid_f, options.depth));
  std::vector<std::vector<StealSample>> logs(orbits);

#pragma omp parallel for num_threads(workers) schedule(static, 1)
  for (int o = 0; o < orbits; ++o) {
    TopsCanvas& canvas = canvases[o];
    Prng rng(stream_seed(options.seed, static_cast<unsigned>(o)));
    ReverseAccumulator acc(options.depth);
    Point2 xf = F.viewport().center();
    Point2 xg = G.viewport().center();
    const std::uint64_t steps = worker_share(options.iterations, orbits, o);
    for (std::uint64_t k = 1; k <= steps; ++k) {
      const Symbol s = select(rng.next());
      xf = apply_map(F.map(s), xf);
      xg = apply_map(G.map(s), xg);
      acc.push(s);
      if (k <= burn_in) continue;
      const auto pixel = grid_f.locate(xf);
      if (!pixel) continue;
      const auto color = picture_g.sample(xg);
      const Rgb c = color.value_or(Rgb{0, 0, 0});
      canvas.offer(*pixel, acc.padded(), c, color.has_value(), xg);
      if (options.keep_log) {
        auto key = acc.padded();
        logs[o].push_back(StealSample{*pixel, {key.begin(), key.end()}, c, color.has_value(), xg});
      }
    }
  }
  TopsCanvas merged = std::move(canvases[0]);
  for (int o = 1; o < orbits; ++o) merged.merge(canvases[o]);

  StealResult result{merged.picture(), {}, false, {}};
  Mask rendered(grid_f);
  const Mask* attractor = options.attractor;
  if (!attractor) {
    rendered = render_converged(F, grid_f).mask;
    attractor = &rendered;
  }
  result.report.pixels_written = merged.records();
  result.report.update_conflicts = merged.replacements();
  result.report.coverage_fraction = coverage_of(result.picture, *attractor);
  result.sampling_failure = result.report.coverage_fraction < kCoverageFloor;
  if (options.keep_log) {
    for (auto& log : logs) {
      result.log.insert(result.log.end(), std::make_move_iterator(log.begin()), std::make_move_iterator(log.end()));
    }
  }
  return result;
}

TransformedPoint transform_point(const DomainPartition& part_f, const Ifs& G, Point2 x, int depth) {
  if (part_f.ifs.size() != G.size()) throw ValidationError("transform needs IFSs with equal map counts");
  const Itinerary it = tops_orbit(part_f, x, depth);
  const PhiResult image = phi_eval(G, it.prefix);
  return {image.point, image.error_radius, it.boundary_flag, it.complete};
}

DeterministicTransform transform_picture_deterministic(const DomainPartition& part_f, const Ifs& G,
                                                       const RasterPicture& picture_g, int depth, int workers) {
  const PixelGrid& grid = part_f.grid;
  DeterministicTransform out{RasterPicture(grid), {}, Mask(grid)};
  const auto n = static_cast<std::int64_t>(grid.pixel_count());
  std::size_t written = 0;

#pragma omp parallel for num_threads(std::max(1, workers)) schedule(dynamic, 4096) reduction(+ : written)
  for (std::int64_t k = 0; k < n; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    if (!part_f.attractor.test(idx)) continue;
    Point2 x = part_f.representatives[idx];
    if (std::isnan(x.x)) x = grid.center(idx);
    try {
      const TransformedPoint t = transform_point(part_f, G, x, depth);
      if (t.boundary_flag) out.boundary.set(idx);
      if (auto c = picture_g.sample(t.point)) {
        out.picture.pixels[idx] = *c;
        out.picture.coverage[idx] = 1;
        ++written;
      }
    } catch (const OffAttractorError&) {
      // Left uncovered.
    }
  }
  out.report.pixels_written = written;
  out.report.coverage_fraction = coverage_of(out.picture, part_f.attractor);
  return out;
}

namespace {

struct CloudPoint {
  Point2 x;
  Point2 image;
};

std::vector<CloudPoint> transformed_cloud(const DomainPartition& part_f, const Ifs& G, std::size_t count,
                                          std::uint64_t seed, int depth) {
  std::vector<CloudPoint> cloud;
  cloud.reserve(count);
  for (Point2 x : sample_attractor(part_f.ifs, count, seed)) {
    if (part_f.label_at(x) == 0) continue;
    const TransformedPoint t = transform_point(part_f, G, x, depth);
    if (!t.complete) continue;
    cloud.push_back({x, t.point});
  }
  return cloud;
}

}  // namespace

std::vector<ContinuityRow> continuity_probe(const DomainPartition& part_f, const Ifs& G,
                                            std::span<const double> epsilons, const ContinuityOptions& options) {
  const auto cloud = transformed_cloud(part_f, G, options.cloud, options.seed, options.depth);
  std::vector<ContinuityRow> rows;
  const Rect& view = part_f.ifs.viewport();

  for (std::size_t e = 0; e < epsilons.size(); ++e) {
    const double eps = epsilons[e];
    if (!(eps > 0.0)) throw ValidationError("continuity scales must be positive");
    ContinuityRow row{eps, 0.0, 0};
    if (cloud.size() < 2) {
      rows.push_back(row);
      continue;
    }

    auto cell_of = [&](Point2 p) {
      const auto cx = static_cast<std::int64_t>(std::floor((p.x - view.min.x) / eps));
      const auto cy = static_cast<std::int64_t>(std::floor((p.y - view.min.y) / eps));
      return std::pair{cx, cy};
    };
    auto key_of = [](std::int64_t cx, std::int64_t cy) {
      return (static_cast<std::uint64_t>(cx) << 32) ^ static_cast<std::uint64_t>(cy & 0xffffffff);
    };
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> cells;
    for (std::uint32_t k = 0; k < cloud.size(); ++k) {
      auto [cx, cy] = cell_of(cloud[k].x);
      cells[key_of(cx, cy)].push_back(k);
    }

    Prng rng(stream_seed(options.seed, static_cast<unsigned>(e + 1)));
    std::vector<std::uint32_t> near;
    const std::size_t attempts = options.samples * 20;
    for (std::size_t t = 0; t < attempts && row.pairs < options.samples; ++t) {
      const auto a = static_cast<std::uint32_t>((rng.next() >> 11) % cloud.size());
      auto [cx, cy] = cell_of(cloud[a].x);
      near.clear();
      for (std::int64_t dy = -1; dy <= 1; ++dy) {
        for (std::int64_t dx = -1; dx <= 1; ++dx) {
          auto it = cells.find(key_of(cx + dx, cy + dy));
          if (it == cells.end()) continue;
          for (std::uint32_t b : it->second) {
            if (b != a && distance(cloud[a].x, cloud[b].x) <= eps) near.push_back(b);
          }
        }
      }
      if (near.empty()) continue;
      const std::uint32_t b = near[(rng.next() >> 11) % near.size()];
      row.max_displacement = std::max(row.max_displacement, distance(cloud[a].image, cloud[b].image));
      ++row.pairs;
    }
    rows.push_back(row);
  }
  return rows;
}

RefinementVerdict refinement_check(const Ifs& F, const Ifs& G, const RefinementOptions& options) {
  const PixelGrid grid(options.grid_size, options.grid_size, F.viewport());
  return refinement_check(build_partition(F, grid), G, options);
}

RefinementVerdict refinement_check(const DomainPartition& part_f, const Ifs& G, const RefinementOptions& options) {
  const Ifs& F = part_f.ifs;
  if (F.size() != G.size()) throw ValidationError("refinement check needs IFSs with equal map counts");
  RefinementVerdict verdict;
  const double pixel_g =
      std::max(G.viewport().width(), G.viewport().height()) / static_cast<double>(part_f.grid.width());
  verdict.tolerance = 4.0 * pixel_g + std::pow(G.contraction(), options.depth) * G.viewport().diameter();

  std::vector<Point2> points = sample_attractor(F, options.samples, options.seed);
  {
    // Eventually constant addresses w n̄ carry the junction points of the attractor.
    const Point2 anchor = attractor_anchor(F);
    std::vector<std::vector<Symbol>> words{{}};
    for (int len = 0; len < options.structured_prefix; ++len) {
      std::vector<std::vector<Symbol>> longer;
      for (const auto& w : words) {
        for (Symbol n = 1; n <= F.size(); ++n) {
          std::vector<Symbol> address = w;
          address.insert(address.end(), 64, n);
          points.push_back(phi_eval(F, AddressPrefix(std::move(address)), anchor).point);
          auto next = w;
          next.push_back(n);
          longer.push_back(std::move(next));
        }
      }
      words = std::move(longer);
    }
  }

  for (Point2 x : points) {
    if (part_f.label_at(x) == 0) continue;
    ++verdict.points_checked;
    const AddressSet set = enumerate_addresses(part_f, x, options.depth);
    if (set.truncated) throw BranchExplosionError("address enumeration exceeded the branch cap");
    if (set.prefixes.size() < 2) continue;
    ++verdict.multi_address_points;
    std::vector<Point2> images;
    images.reserve(set.prefixes.size());
    for (const auto& p : set.prefixes) images.push_back(phi_eval(G, p).point);
    for (std::size_t i = 0; i < images.size(); ++i) {
      for (std::size_t j = i + 1; j < images.size(); ++j) {
        const double gap = distance(images[i], images[j]);
        if (gap > verdict.tolerance && (!verdict.witness || gap > verdict.witness->separation)) {
          verdict.consistent = false;
          verdict.witness = RefinementWitness{x, set.prefixes[i], set.prefixes[j], images[i], images[j], gap};
        }
      }
    }
  }
  return verdict;
}

double AreaEstimate::ratio_sigma() const {
  const double rf = sigma_f / area_f;
  const double rg = sigma_g / area_g;
  return ratio() * std::sqrt(rf * rf + rg * rg);
}

OccupiedArea occupied_area(const Mask& occupied) {
  const PixelGrid& g = occupied.grid();
  std::size_t interior = 0;
  std::size_t rim = 0;
  for (int j = 0; j < g.height(); ++j) {
    for (int i = 0; i < g.width(); ++i) {
      if (!occupied.test(i, j)) continue;
      const bool inside = i > 0 && j > 0 && i + 1 < g.width() && j + 1 < g.height() && occupied.test(i - 1, j) &&
                          occupied.test(i + 1, j) && occupied.test(i, j - 1) && occupied.test(i, j + 1);
      (inside ? interior : rim) += 1;
    }
  }
  const double cell = g.pitch_x() * g.pitch_y();
  return {(static_cast<double>(interior) + 0.5 * static_cast<double>(rim)) * cell,
          0.5 * std::sqrt(static_cast<double>(rim)) * cell};
}

AreaEstimate area_probe(const DomainPartition& part_f, const Ifs& G, const Rect& region, const AreaOptions& options) {
  if (!(region.width() > 0.0) || !(region.height() > 0.0)) throw ValidationError("area region must have extent");
  const PixelGrid count_f(options.count_grid, options.count_grid, part_f.ifs.viewport());
  const PixelGrid count_g(options.count_grid, options.count_grid, G.viewport());
  Mask occupied_f(count_f);
  Mask occupied_g(count_g);
  Prng rng(options.seed);
  AreaEstimate est;
  for (std::size_t s = 0; s < options.samples; ++s) {
    const Point2 x{region.min.x + rng.uniform() * region.width(), region.min.y + rng.uniform() * region.height()};
    const auto pixel = part_f.grid.locate(x);
    if (!pixel || !part_f.attractor.test(*pixel)) continue;
    ++est.accepted;
    occupied_f.plot(x);
    occupied_g.plot(transform_point(part_f, G, x, options.depth).point);
  }
  if (est.accepted == 0) throw EmptyMaskError("area region does not meet the attractor");
  const OccupiedArea af = occupied_area(occupied_f);
  const OccupiedArea ag = occupied_area(occupied_g);
  est.area_f = af.area;
  est.sigma_f = af.sigma;
  est.area_g = ag.area;
  est.sigma_g = ag.sigma;
  return est;
}

}  // namespace fractops
