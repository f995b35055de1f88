#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "fractops/geometry.hpp"
#include "fractops/ifs.hpp"
#include "fractops/raster.hpp"

namespace fractops {

/// The unique affine map sending src[k] to dst[k]. Throws ValidationError for
/// collinear sources.
AffineMap2 affine_from_correspondence(const std::array<Point2, 3>& src, const std::array<Point2, 3>& dst);

struct TriangleSpec {
  Point2 A{0.0, 0.0};
  Point2 B{1.0, 0.0};
  Point2 C{0.5, 1.0};
  double alpha = 0.5;
  double beta = 0.5;
  double gamma = 0.5;
};

/// Division points of the triangle sides: c on AB, a on BC, b on CA.
struct TrianglePoints {
  Point2 a;
  Point2 b;
  Point2 c;
};

TrianglePoints triangle_points(const TriangleSpec& spec);

/// The four maps ABC -> aBc, abC, Abc, abc; their images tile the triangle.
Ifs triangle_family(const TriangleSpec& spec);

/// The first three triangle maps (the central tile removed).
Ifs sierpinski_family(const TriangleSpec& spec);

Ifs fern_ifs();
Ifs square_cts_ifs();
Ifs square_disc_ifs();

/// z -> s z - 1 and z -> s z + 1 as planar maps on [-3.5, 3.5]^2.
Ifs dragon_ifs(double s_re, double s_im);

/// Literal evaluation of the published coefficient formulas for the
/// triangle family, kept as reference data.
std::array<AffineMap2, 4> table1_reference(double alpha, double beta, double gamma);

/// Coverage restricted to the mask; colors untouched.
RasterPicture mask_picture(const RasterPicture& pic, const Mask& m);

struct GalleryEntry {
  std::string name;
  std::string provenance;
};

/// Built-in families and the source of their coefficients.
std::vector<GalleryEntry> gallery_catalog();

/// Concrete built-ins exercised by the chaos/deterministic agreement check.
std::vector<std::string> gallery_examples();

/// Resolves "fern", "square-cts", "square-disc", "dragon:<re>,<im>",
/// "tri:<a>,<b>,<g>" and "sierpinski:<a>,<b>,<g>". Throws ValidationError
/// for unknown names.
Ifs gallery_ifs(std::string_view name);

bool is_gallery_name(std::string_view name);

}  // namespace fractops
