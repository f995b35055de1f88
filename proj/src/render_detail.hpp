#pragma once

#include <vector>

#include "fractops/attractor.hpp"

namespace fractops::detail {

inline constexpr int kMaxNodeDepth = 96;

/// A node of the address tree: the composition f_{s1} ∘ ... ∘ f_{sk}.
/// `band` orders the traversal: it grows with depth and with -log2|det|, so
/// larger pieces are judged first.
struct Node {
  AffineMap2 map;
  Symbol first = 0;
  int depth = 0;
  int band = 0;
};

Node child(const Node& node, const Ifs& ifs, Symbol s);

/// Inclusive pixel index ranges, clamped to the grid.
struct PixelSpan {
  int i0 = 0, i1 = -1, j0 = 0, j1 = -1;
  bool empty() const { return i1 < i0 || j1 < j0; }
};

enum class Fate { Dropped, Leaf, Covered, Expand };

/// The image of an attractor point under a node, and what to do with the node.
struct Visit {
  Fate fate = Fate::Dropped;
  Point2 point;
  std::size_t pixel = 0;
  bool plotted = false;
};

/// Shared state of one coverage-pruned traversal.
struct Walk {
  Walk(const Ifs& ifs, const PixelGrid& grid, double tol);

  /// Decides a node against the image masks of the previous levels.
  Visit visit(const Node& node, const std::vector<Mask>& images) const;

  const Ifs& ifs;
  PixelGrid grid;
  double tol;
  Rect box;
  Point2 anchor;
};

/// p wins over q for a pixel centered at c: nearer, then smaller x, then smaller y.
bool closer_to(Point2 p, Point2 q, Point2 c);

double leaf_tolerance(const PixelGrid& grid, const ConvergedOptions& options);

}  // namespace fractops::detail
