#include "fractops/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <string>

#include "fractops/attractor.hpp"
#include "fractops/config.hpp"
#include "fractops/error.hpp"
#include "fractops/gallery.hpp"
#include "fractops/ppm.hpp"
#include "fractops/tops.hpp"
#include "fractops/transform.hpp"

namespace fractops {

namespace {

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error(ErrorKind::Usage, what) {}
};

std::vector<double> split_numbers(const std::string& text, char sep, std::size_t count, const std::string& what) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, sep)) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != part.size()) throw UsageError("bad " + what + " '" + text + "'");
    out.push_back(v);
  }
  if (out.size() != count) throw UsageError("bad " + what + " '" + text + "'");
  return out;
}

Point2 parse_point(const std::string& text) {
  const auto v = split_numbers(text, ',', 2, "point");
  return {v[0], v[1]};
}

std::pair<int, int> parse_size(const std::string& text) {
  const auto v = split_numbers(text, 'x', 2, "size");
  if (v[0] < 1 || v[1] < 1 || v[0] != std::floor(v[0]) || v[1] != std::floor(v[1])) {
    throw UsageError("bad size '" + text + "'");
  }
  return {static_cast<int>(v[0]), static_cast<int>(v[1])};
}

Rect parse_rect(const std::string& text) {
  const auto v = split_numbers(text, ',', 4, "region");
  return {{v[0], v[1]}, {v[2], v[3]}};
}

std::string format_map(const AffineMap2& m) {
  std::ostringstream s;
  s << std::setprecision(6) << "(" << m.a << ", " << m.b << ", " << m.c << ", " << m.d << ", " << m.e << ", " << m.l
    << ")";
  return s.str();
}

struct RenderArgs {
  std::string ifs;
  std::string out;
  std::string size = "512x512";
  std::string method = "chaos";
  std::uint64_t iters = 10'000'000;
  std::uint64_t seed = 1;
  int workers = 1;
};

struct TransformArgs {
  std::string from;
  std::string to;
  std::string picture;
  std::string out;
  std::string method = "steal";
  int depth = -1;
  std::uint64_t iters = 10'000'000;
  std::uint64_t seed = 1;
  int workers = 1;
  int orbits = 1;
};

struct PointArgs {
  std::string ifs;
  std::string point;
  int depth = 12;
  int grid = 512;
  std::size_t max_count = kDefaultBranchCap;
};

struct DiagnoseArgs {
  std::string from;
  std::string to;
  bool continuity = false;
  bool refinement = false;
  std::string area;
  int depth = -1;
  std::size_t samples = 0;
  std::uint64_t seed = 1;
  int grid = 512;
};

int do_render(const RenderArgs& a, std::ostream& out) {
  const Ifs ifs = load_ifs(a.ifs);
  const auto [w, h] = parse_size(a.size);
  const PixelGrid grid(w, h, ifs.viewport());
  Mask mask(grid);
  if (a.method == "chaos") {
    mask = render_chaos(ifs, ChaosOptions{a.iters, a.seed, kDefaultBurnIn, a.workers}, grid);
  } else if (a.method == "det") {
    ConvergedOptions opts;
    opts.workers = a.workers;
    mask = render_converged(ifs, grid, opts).mask;
  } else {
    throw UsageError("--method must be chaos or det");
  }
  write_pnm(a.out, mask_image(mask));
  out << "pixels " << mask.count() << "\n";
  return 0;
}

int do_transform(const TransformArgs& a, std::ostream& out, std::ostream& err) {
  const Ifs F = load_ifs(a.from);
  const Ifs G = load_ifs(a.to);
  if (F.size() != G.size()) throw ValidationError("--from and --to need the same number of maps");
  RasterPicture picture = ppm_read(a.picture, G.viewport());
  picture = mask_picture(picture, render_converged(G, picture.grid).mask);
  const PixelGrid grid_f(picture.grid.width(), picture.grid.height(), F.viewport());

  RasterPicture result(grid_f);
  TransformReport report;
  if (a.method == "steal") {
    StealOptions opts;
    opts.iterations = a.iters;
    opts.seed = a.seed;
    opts.depth = a.depth > 0 ? static_cast<std::size_t>(a.depth) : kDefaultMaxDepth;
    opts.orbits = a.orbits;
    opts.workers = a.workers;
    StealResult r = color_steal(F, G, picture, grid_f, opts);
    if (r.sampling_failure) {
      err << "warning: sampling failure, coverage " << r.report.coverage_fraction << " below " << kCoverageFloor
          << "\n";
    }
    result = std::move(r.picture);
    report = r.report;
  } else if (a.method == "det") {
    const DomainPartition part = build_partition(F, grid_f, PartitionOptions{0.25, a.workers});
    DeterministicTransform r = transform_picture_deterministic(part, G, picture, a.depth > 0 ? a.depth : 40, a.workers);
    result = std::move(r.picture);
    report = r.report;
  } else {
    throw UsageError("--method must be steal or det");
  }
  ppm_write(a.out, result, a.out + ".coverage.pgm");
  out << "pixels_written " << report.pixels_written << "\n"
      << "update_conflicts " << report.update_conflicts << "\n"
      << "coverage_fraction " << report.coverage_fraction << "\n";
  return 0;
}

DomainPartition partition_for(const Ifs& ifs, int grid) {
  if (grid < 1) throw UsageError("--grid must be positive");
  return build_partition(ifs, PixelGrid(grid, grid, ifs.viewport()));
}

int do_tops(const PointArgs& a, std::ostream& out, std::ostream& err) {
  const Ifs ifs = load_ifs(a.ifs);
  const DomainPartition part = partition_for(ifs, a.grid);
  const Itinerary it = tops_orbit(part, parse_point(a.point), a.depth);
  out << it.prefix.to_string() << "\n";
  if (!it.complete) err << "note: orbit left the attractor after " << it.prefix.size() << " steps\n";
  if (it.boundary_flag) err << "note: orbit passed a cell boundary pixel\n";
  return 0;
}

int do_addresses(const PointArgs& a, std::ostream& out, std::ostream& err) {
  const Ifs ifs = load_ifs(a.ifs);
  const DomainPartition part = partition_for(ifs, a.grid);
  const AddressSet set = enumerate_addresses(part, parse_point(a.point), a.depth, a.max_count);
  for (const auto& p : set.prefixes) out << p.to_string() << "\n";
  if (set.truncated) err << "note: enumeration truncated at " << a.max_count << " branches\n";
  return 0;
}

int do_diagnose(const DiagnoseArgs& a, std::ostream& out) {
  const int chosen = (a.continuity ? 1 : 0) + (a.refinement ? 1 : 0) + (a.area.empty() ? 0 : 1);
  if (chosen != 1) throw UsageError("choose exactly one of --continuity, --refinement, --area");
  const Ifs F = load_ifs(a.from);
  const Ifs G = load_ifs(a.to);
  if (F.size() != G.size()) throw ValidationError("--from and --to need the same number of maps");
  const DomainPartition part = partition_for(F, a.grid);

  if (a.continuity) {
    ContinuityOptions opts;
    opts.seed = a.seed;
    if (a.depth > 0) opts.depth = a.depth;
    if (a.samples > 0) opts.samples = a.samples;
    const double pixel = part.grid.pitch();
    std::vector<double> eps{32 * pixel, 16 * pixel, 8 * pixel, 4 * pixel};
    out << "epsilon_px epsilon max_displacement pairs\n";
    for (const auto& row : continuity_probe(part, G, eps, opts)) {
      out << std::setprecision(6) << row.epsilon / pixel << " " << row.epsilon << " " << row.max_displacement << " "
          << row.pairs << "\n";
    }
  } else if (a.refinement) {
    RefinementOptions opts;
    opts.seed = a.seed;
    opts.grid_size = a.grid;
    if (a.depth > 0) opts.depth = a.depth;
    if (a.samples > 0) opts.samples = a.samples;
    const RefinementVerdict v = refinement_check(part, G, opts);
    out << (v.consistent ? "ConsistentWithRefinement" : "Violation") << "\n";
    out << "points_checked " << v.points_checked << " multi_address " << v.multi_address_points << " tolerance "
        << v.tolerance << "\n";
    if (v.witness) {
      const auto& w = *v.witness;
      out << "witness x=(" << w.x.x << "," << w.x.y << ") " << w.first.to_string() << " -> (" << w.first_image.x
          << "," << w.first_image.y << ") " << w.second.to_string() << " -> (" << w.second_image.x << ","
          << w.second_image.y << ") separation " << w.separation << "\n";
    }
  } else {
    AreaOptions opts;
    opts.seed = a.seed;
    if (a.depth > 0) opts.depth = a.depth;
    if (a.samples > 0) opts.samples = a.samples;
    const AreaEstimate e = area_probe(part, G, parse_rect(a.area), opts);
    out << std::setprecision(6) << "area_f " << e.area_f << " +- " << e.sigma_f << "\n"
        << "area_g " << e.area_g << " +- " << e.sigma_g << "\n"
        << "ratio " << e.ratio() << " +- " << e.ratio_sigma() << "\n"
        << "accepted " << e.accepted << "\n";
  }
  return 0;
}

int do_gallery(std::ostream& out) {
  out << "Built-in IFSs:\n";
  for (const auto& e : gallery_catalog()) out << "  " << std::left << std::setw(36) << e.name << e.provenance << "\n";

  out << "\nReference table versus correspondence construction (alpha = beta = gamma = 0.5):\n";
  const auto table = table1_reference(0.5, 0.5, 0.5);
  const Ifs built = triangle_family(TriangleSpec{});
  for (std::size_t n = 0; n < 4; ++n) {
    const AffineMap2& t = table[n];
    const AffineMap2& b = built.maps()[n];
    const double diff = std::max({std::abs(t.a - b.a), std::abs(t.b - b.b), std::abs(t.c - b.c), std::abs(t.d - b.d),
                                  std::abs(t.e - b.e), std::abs(t.l - b.l)});
    out << "  map " << n + 1 << " table " << format_map(t) << " built " << format_map(b) << " max|diff| " << diff
        << "\n";
  }

  const Ifs cts = square_cts_ifs();
  const Point2 k_image = apply_map(cts.map(2), {0.0, 0.0});
  const Point2 m_point = apply_map(cts.map(1), {1.0, 1.0});
  out << "\nsquare-cts: g2(K) = (" << k_image.x << ", " << k_image.y << ") while M = g1(I) = (" << m_point.x << ", "
      << m_point.y << ")" << (k_image == m_point ? "" : "  [differ; coefficients kept as published]") << "\n";
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fractal tops, attractors and fractal transformations", "fractops"};
  app.require_subcommand(1);

  RenderArgs render;
  auto* r = app.add_subcommand("render", "Rasterize an attractor to a P6 mask");
  r->add_option("ifs", render.ifs, "Gallery name or config file")->required();
  r->add_option("--out", render.out, "Output P6 path")->required();
  r->add_option("--size", render.size, "WxH");
  r->add_option("--method", render.method, "chaos or det");
  r->add_option("--iters", render.iters, "Chaos game iterations");
  r->add_option("--seed", render.seed, "PRNG seed");
  r->add_option("--workers", render.workers, "Parallel workers")->check(CLI::PositiveNumber);

  TransformArgs transform;
  auto* t = app.add_subcommand("transform", "Fractal transformation of a picture");
  t->add_option("--from", transform.from, "Source IFS (F)")->required();
  t->add_option("--to", transform.to, "Target IFS (G) carrying the picture")->required();
  t->add_option("--picture", transform.picture, "P6 picture over G's viewport")->required();
  t->add_option("--out", transform.out, "Output P6 path")->required();
  t->add_option("--method", transform.method, "steal or det");
  t->add_option("--depth", transform.depth, "Address depth");
  t->add_option("--iters", transform.iters, "Chaos game iterations (steal)");
  t->add_option("--seed", transform.seed, "PRNG seed");
  t->add_option("--workers", transform.workers, "Parallel workers")->check(CLI::PositiveNumber);
  t->add_option("--orbits", transform.orbits, "Independent orbits (steal)")->check(CLI::PositiveNumber);

  PointArgs tops;
  auto* tp = app.add_subcommand("tops", "Tops address of a point");
  tp->add_option("ifs", tops.ifs, "Gallery name or config file")->required();
  tp->add_option("--point", tops.point, "x,y")->required();
  tp->add_option("--depth", tops.depth, "Itinerary length")->check(CLI::NonNegativeNumber);
  tp->add_option("--grid", tops.grid, "Partition raster size");

  PointArgs addresses;
  auto* ad = app.add_subcommand("addresses", "All addresses of a point by backwards orbits");
  ad->add_option("ifs", addresses.ifs, "Gallery name or config file")->required();
  ad->add_option("--point", addresses.point, "x,y")->required();
  ad->add_option("--depth", addresses.depth, "Prefix length")->check(CLI::NonNegativeNumber);
  ad->add_option("--grid", addresses.grid, "Partition raster size");
  ad->add_option("--max", addresses.max_count, "Branch cap")->check(CLI::PositiveNumber);

  DiagnoseArgs diagnose;
  auto* dg = app.add_subcommand("diagnose", "Continuity, refinement or area diagnostics");
  dg->add_option("--from", diagnose.from, "Source IFS (F)")->required();
  dg->add_option("--to", diagnose.to, "Target IFS (G)")->required();
  dg->add_flag("--continuity", diagnose.continuity, "Displacement versus scale");
  dg->add_flag("--refinement", diagnose.refinement, "Address-structure refinement verdict");
  dg->add_option("--area", diagnose.area, "x0,y0,x1,y1 region in F's viewport");
  dg->add_option("--depth", diagnose.depth, "Address depth");
  dg->add_option("--samples", diagnose.samples, "Sample count");
  dg->add_option("--seed", diagnose.seed, "PRNG seed");
  dg->add_option("--grid", diagnose.grid, "Partition raster size");

  app.add_subcommand("gallery", "List built-in IFSs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(ErrorKind::Usage);
  }

  try {
    if (r->parsed()) return do_render(render, out);
    if (t->parsed()) return do_transform(transform, out, err);
    if (tp->parsed()) return do_tops(tops, out, err);
    if (ad->parsed()) return do_addresses(addresses, out, err);
    if (dg->parsed()) return do_diagnose(diagnose, out);
    return do_gallery(out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(ErrorKind::Numerical);
  }
}

}  // namespace fractops
