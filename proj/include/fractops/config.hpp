#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fractops/geometry.hpp"
#include "fractops/ifs.hpp"

namespace fractops {

/// Text form of an IFS: `key = value` lines with keys name, map (repeated,
/// six numbers a b c d e l), probabilities and viewport (xmin ymin xmax ymax).
/// '#' starts a comment.
struct IfsConfig {
  std::string name;
  std::vector<AffineMap2> maps;
  std::optional<std::vector<double>> probabilities;
  Rect viewport{{0.0, 0.0}, {1.0, 1.0}};

  friend bool operator==(const IfsConfig&, const IfsConfig&) = default;
};

/// Throws ValidationError on malformed text.
IfsConfig parse_config(std::string_view text);

/// Round-trips through parse_config exactly (17 significant digits).
std::string serialize_config(const IfsConfig& config);

Ifs config_to_ifs(const IfsConfig& config);
IfsConfig ifs_to_config(const Ifs& ifs);

/// A gallery name, or else a path to a config file.
Ifs load_ifs(const std::string& spec);

}  // namespace fractops
