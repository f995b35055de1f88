#include "fractops/gallery.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "fractops/error.hpp"

namespace fractops {

namespace {

const Rect kUnitSquare{{0.0, 0.0}, {1.0, 1.0}};

double cross(Point2 o, Point2 p, Point2 q) { return (p.x - o.x) * (q.y - o.y) - (p.y - o.y) * (q.x - o.x); }

Point2 lerp(Point2 from, Point2 to, double t) { return {from.x + t * (to.x - from.x), from.y + t * (to.y - from.y)}; }

void check_spec(const TriangleSpec& spec) {
  if (!(std::abs(cross(spec.A, spec.B, spec.C)) * 0.5 > 1e-12)) {
    throw ValidationError("triangle vertices are collinear");
  }
  for (double t : {spec.alpha, spec.beta, spec.gamma}) {
    if (!(t > 0.0 && t < 1.0)) throw ValidationError("triangle parameters must lie strictly inside (0, 1)");
  }
}

std::vector<AffineMap2> triangle_maps(const TriangleSpec& spec) {
  check_spec(spec);
  const auto [a, b, c] = triangle_points(spec);
  const std::array<Point2, 3> src{spec.A, spec.B, spec.C};
  return {
      affine_from_correspondence(src, {a, spec.B, c}),
      affine_from_correspondence(src, {a, b, spec.C}),
      affine_from_correspondence(src, {spec.A, b, c}),
      affine_from_correspondence(src, {a, b, c}),
  };
}

Rect triangle_viewport(const TriangleSpec& spec) {
  if (spec.A == Point2{0.0, 0.0} && spec.B == Point2{1.0, 0.0} && spec.C == Point2{0.5, 1.0}) return kUnitSquare;
  const double x0 = std::min({spec.A.x, spec.B.x, spec.C.x});
  const double y0 = std::min({spec.A.y, spec.B.y, spec.C.y});
  const double x1 = std::max({spec.A.x, spec.B.x, spec.C.x});
  const double y1 = std::max({spec.A.y, spec.B.y, spec.C.y});
  return {{x0, y0}, {x1, y1}};
}

Ifs rows_to_ifs(std::initializer_list<AffineMap2> rows, std::string name) {
  return validate_hyperbolic(std::vector<AffineMap2>(rows), std::nullopt, kUnitSquare).with_name(std::move(name));
}

std::vector<double> parse_numbers(std::string_view text, std::string_view name) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view part = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    double v = 0.0;
    const auto [end, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc{} || end != part.data() + part.size() || part.empty()) {
      throw ValidationError("bad parameter list in gallery name '" + std::string(name) + "'");
    }
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string format_params(const std::vector<double>& v) {
  std::ostringstream s;
  for (std::size_t k = 0; k < v.size(); ++k) s << (k ? "," : "") << v[k];
  return s.str();
}

}  // namespace

AffineMap2 affine_from_correspondence(const std::array<Point2, 3>& src, const std::array<Point2, 3>& dst) {
  // Solve [x y 1] * [a d; b e; c l] = [x' y'] for the three rows by Cramer's rule.
  const double det = cross(src[0], src[1], src[2]);
  if (!(std::abs(det) > 1e-14)) throw ValidationError("correspondence source points are collinear");
  const double x0 = src[0].x, y0 = src[0].y;
  const double x1 = src[1].x, y1 = src[1].y;
  const double x2 = src[2].x, y2 = src[2].y;
  auto solve = [&](double v0, double v1, double v2) {
    // Unknowns p, q, r with p*x + q*y + r = v at each source point.
    const double dv1 = v1 - v0, dv2 = v2 - v0;
    const double dx1 = x1 - x0, dx2 = x2 - x0;
    const double dy1 = y1 - y0, dy2 = y2 - y0;
    const double p = (dv1 * dy2 - dv2 * dy1) / det;
    const double q = (dx1 * dv2 - dx2 * dv1) / det;
    return std::array<double, 3>{p, q, v0 - p * x0 - q * y0};
  };
  const auto xs = solve(dst[0].x, dst[1].x, dst[2].x);
  const auto ys = solve(dst[0].y, dst[1].y, dst[2].y);
  return {xs[0], xs[1], xs[2], ys[0], ys[1], ys[2]};
}

TrianglePoints triangle_points(const TriangleSpec& spec) {
  TrianglePoints pts;
  pts.c = lerp(spec.B, spec.A, spec.alpha);
  pts.a = lerp(spec.C, spec.B, spec.beta);
  pts.b = lerp(spec.A, spec.C, spec.gamma);
  return pts;
}

Ifs triangle_family(const TriangleSpec& spec) {
  std::ostringstream name;
  name << "tri:" << spec.alpha << "," << spec.beta << "," << spec.gamma;
  return validate_hyperbolic(triangle_maps(spec), std::nullopt, triangle_viewport(spec)).with_name(name.str());
}

Ifs sierpinski_family(const TriangleSpec& spec) {
  auto maps = triangle_maps(spec);
  maps.pop_back();
  std::ostringstream name;
  name << "sierpinski:" << spec.alpha << "," << spec.beta << "," << spec.gamma;
  return validate_hyperbolic(std::move(maps), std::nullopt, triangle_viewport(spec)).with_name(name.str());
}

Ifs fern_ifs() {
  return rows_to_ifs({{0.85, -0.05, 0.125, 0.05, 0.85, -0.039},
                      {0.06, 0.02, 0.45, 0.0, 0.165, 0.835},
                      {0.17, 0.22, 0.195, -0.22, 0.17, 0.776},
                      {-0.17, -0.22, 0.805, -0.22, 0.17, 0.776}},
                     "fern");
}

Ifs square_cts_ifs() {
  return rows_to_ifs({{0.8, 0.0, 0.0, 0.0, 0.8, 0.0},
                      {0.2, 0.0, 0.8, 0.0, 0.8, 0.2},
                      {-0.2, 0.0, 1.0, 0.0, 0.8, 0.0},
                      {0.8, 0.0, 0.0, 0.0, -0.2, 1.0}},
                     "square-cts");
}

Ifs square_disc_ifs() {
  return rows_to_ifs({{-0.8, 0.0, 0.8, 0.0, -0.8, 0.8},
                      {-0.2, 0.0, 1.0, 0.0, -0.2, 1.0},
                      {0.8, 0.0, 0.0, 0.0, 0.2, 0.8},
                      {0.2, 0.0, 0.8, 0.0, 0.8, 0.0}},
                     "square-disc");
}

Ifs dragon_ifs(double s_re, double s_im) {
  if (!(std::hypot(s_re, s_im) < 1.0)) throw NonContractiveError("dragon multiplier must satisfy |s| < 1");
  const AffineMap2 left{s_re, -s_im, -1.0, s_im, s_re, 0.0};
  const AffineMap2 right{s_re, -s_im, 1.0, s_im, s_re, 0.0};
  std::ostringstream name;
  name << "dragon:" << s_re << "," << s_im;
  return validate_hyperbolic({left, right}, std::nullopt, Rect{{-3.5, -3.5}, {3.5, 3.5}}).with_name(name.str());
}

std::array<AffineMap2, 4> table1_reference(double alpha, double beta, double gamma) {
  const double a = alpha, b = beta, g = gamma;
  return {{
      {-1.0 + b, -0.5 + 0.5 * b + 0.5 * a, 1.0 - b, 0.0, a, 0.0},
      {b + 0.5 * g - 0.5, 0.5 * b - 0.25 * g + 0.25, 1.0 - b, 1.0 - g, 0.5 * g - 0.5, 0.0},
      {0.5 * g, -0.5 + 0.5 * a - 0.25 * g, 0.5, -g, -1.0 + a + 0.5 * g, 1.0},
      {b + 0.5 * g - 0.5, -0.75 + 0.5 * b + 0.5 * a - 0.25 * g, 1.0 - b, 1.0 - g, a - 0.5 + 0.5 * g, 0.0},
  }};
}

RasterPicture mask_picture(const RasterPicture& pic, const Mask& m) {
  if (!(pic.grid == m.grid())) throw GridMismatchError("picture and mask grids differ");
  RasterPicture out = pic;
  for (std::size_t k = 0; k < out.coverage.size(); ++k) out.coverage[k] = (out.coverage[k] && m.test(k)) ? 1 : 0;
  return out;
}

std::vector<GalleryEntry> gallery_catalog() {
  return {
      {"fern", "fern table, literal coefficients"},
      {"square-cts", "square table admitting a continuous transformation, literal coefficients"},
      {"square-disc", "square table giving a discontinuous transformation, literal coefficients"},
      {"dragon:<re>,<im>", "z -> s z -/+ 1 with s = re + i im, viewport [-3.5, 3.5]^2"},
      {"tri:<alpha>,<beta>,<gamma>", "four triangle maps built from vertex correspondences, A=(0,0) B=(1,0) C=(0.5,1)"},
      {"sierpinski:<alpha>,<beta>,<gamma>", "first three triangle maps"},
  };
}

std::vector<std::string> gallery_examples() {
  return {"fern",
          "square-cts",
          "square-disc",
          "dragon:0.5,0.5",
          "dragon:0.44,0.44",
          "dragon:0.535,0.535",
          "tri:0.5,0.5,0.5",
          "tri:0.525,0.525,0.525",
          "tri:0.475,0.475,0.475",
          "tri:0.4,0.6,0.475",
          "tri:0.65,0.3,0.4",
          "sierpinski:0.65,0.3,0.4"};
}

Ifs gallery_ifs(std::string_view name) {
  if (name == "fern") return fern_ifs();
  if (name == "square-cts") return square_cts_ifs();
  if (name == "square-disc") return square_disc_ifs();
  const auto colon = name.find(':');
  if (colon != std::string_view::npos) {
    const std::string_view family = name.substr(0, colon);
    const auto params = parse_numbers(name.substr(colon + 1), name);
    if (family == "dragon" && params.size() == 2) {
      return dragon_ifs(params[0], params[1]).with_name("dragon:" + format_params(params));
    }
    if ((family == "tri" || family == "sierpinski") && params.size() == 3) {
      TriangleSpec spec;
      spec.alpha = params[0];
      spec.beta = params[1];
      spec.gamma = params[2];
      Ifs ifs = family == "tri" ? triangle_family(spec) : sierpinski_family(spec);
      return ifs.with_name(std::string(family) + ":" + format_params(params));
    }
  }
  throw ValidationError("unknown gallery IFS '" + std::string(name) + "'");
}

bool is_gallery_name(std::string_view name) {
  if (name == "fern" || name == "square-cts" || name == "square-disc") return true;
  return name.starts_with("dragon:") || name.starts_with("tri:") || name.starts_with("sierpinski:");
}

}  // namespace fractops
