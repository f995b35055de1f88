#include "fractops/config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "fractops/error.hpp"
#include "fractops/gallery.hpp"

namespace fractops {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<double> numbers(std::string_view text, std::size_t line_no) {
  std::istringstream in{std::string(text)};
  std::vector<double> out;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) {
      throw ValidationError("line " + std::to_string(line_no) + ": '" + token + "' is not a number");
    }
    out.push_back(v);
  }
  return out;
}

std::string format(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

IfsConfig parse_config(std::string_view text) {
  IfsConfig cfg;
  bool have_viewport = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    std::string_view line = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    start = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ValidationError("line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key == "name") {
      cfg.name = std::string(value);
    } else if (key == "map") {
      const auto v = numbers(value, line_no);
      if (v.size() != 6) throw ValidationError("line " + std::to_string(line_no) + ": a map needs six numbers");
      cfg.maps.push_back({v[0], v[1], v[2], v[3], v[4], v[5]});
    } else if (key == "probabilities") {
      cfg.probabilities = numbers(value, line_no);
    } else if (key == "viewport") {
      const auto v = numbers(value, line_no);
      if (v.size() != 4) throw ValidationError("line " + std::to_string(line_no) + ": a viewport needs four numbers");
      cfg.viewport = {{v[0], v[1]}, {v[2], v[3]}};
      have_viewport = true;
    } else {
      throw ValidationError("line " + std::to_string(line_no) + ": unknown key '" + std::string(key) + "'");
    }
  }
  if (cfg.maps.empty()) throw ValidationError("config defines no maps");
  if (!have_viewport) throw ValidationError("config defines no viewport");
  return cfg;
}

std::string serialize_config(const IfsConfig& config) {
  std::ostringstream out;
  if (!config.name.empty()) out << "name = " << config.name << "\n";
  for (const auto& m : config.maps) {
    out << "map =";
    for (double v : {m.a, m.b, m.c, m.d, m.e, m.l}) out << " " << format(v);
    out << "\n";
  }
  if (config.probabilities) {
    out << "probabilities =";
    for (double p : *config.probabilities) out << " " << format(p);
    out << "\n";
  }
  const Rect& v = config.viewport;
  out << "viewport = " << format(v.min.x) << " " << format(v.min.y) << " " << format(v.max.x) << " "
      << format(v.max.y) << "\n";
  return out.str();
}

Ifs config_to_ifs(const IfsConfig& config) {
  return validate_hyperbolic(config.maps, config.probabilities, config.viewport).with_name(config.name);
}

IfsConfig ifs_to_config(const Ifs& ifs) {
  IfsConfig cfg;
  cfg.name = ifs.name();
  cfg.maps.assign(ifs.maps().begin(), ifs.maps().end());
  cfg.probabilities = std::vector<double>(ifs.probabilities().begin(), ifs.probabilities().end());
  cfg.viewport = ifs.viewport();
  return cfg;
}

Ifs load_ifs(const std::string& spec) {
  if (is_gallery_name(spec)) return gallery_ifs(spec);
  std::ifstream in(spec);
  if (!in) throw IoError("'" + spec + "' is neither a gallery name nor a readable config file");
  std::stringstream buf;
  buf << in.rdbuf();
  return config_to_ifs(parse_config(buf.str()));
}

}  // namespace fractops
