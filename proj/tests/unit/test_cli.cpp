#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "fractops/cli.hpp"
#include "fractops/ppm.hpp"

using namespace fractops;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "fractops");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::uint64_t fnv1a(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (auto it = std::istreambuf_iterator<char>(in); it != std::istreambuf_iterator<char>(); ++it) {
    h ^= static_cast<unsigned char>(*it);
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "fractops_cli";
  std::filesystem::create_directories(dir);
  return (dir / name).string();
}

}  // namespace

TEST_CASE("cli tops and addresses") {
  const Run tops = run({"tops", "square-cts", "--point", "1,1", "--depth", "8"});
  CHECK(tops.code == 0);
  CHECK(tops.out == "22222222\n");
  const Run vertex = run({"addresses", "tri:0.5,0.5,0.5", "--point", "0,0", "--depth", "8", "--grid", "256"});
  CHECK(vertex.out == "33333333\n");
}

TEST_CASE("cli refinement verdict") {
  const Run disc = run({"diagnose", "--from", "fern", "--to", "square-disc", "--refinement"});
  CHECK(disc.code == 0);
  CHECK(disc.out.rfind("Violation\n", 0) == 0);
  const Run cts = run({"diagnose", "--from", "fern", "--to", "square-cts", "--refinement"});
  CHECK(cts.out.rfind("ConsistentWithRefinement\n", 0) == 0);
}

TEST_CASE("cli chaos render matches the golden mask") {
  const std::string path = scratch("fern.ppm");
  const Run r = run({"render", "fern", "--size", "512x512", "--method", "chaos", "--iters", "10000000", "--seed", "1",
                     "--out", path});
  REQUIRE(r.code == 0);
  const Image8 img = read_pnm(path);
  CHECK(img.width == 512);
  CHECK(img.height == 512);
  CHECK(fnv1a(path) == 0x44bbf265dba8385dULL);
}

TEST_CASE("cli transform writes a picture") {
  const std::string picture = scratch("gradient.ppm");
  Image8 img{64, 64, 3, std::vector<std::uint8_t>(64 * 64 * 3)};
  for (std::size_t k = 0; k < img.bytes.size(); ++k) img.bytes[k] = static_cast<std::uint8_t>(k * 7);
  write_pnm(picture, img);
  const std::string out = scratch("fern_from_square.ppm");
  const Run r = run({"transform", "--from", "fern", "--to", "square-cts", "--picture", picture, "--out", out,
                     "--method", "det", "--depth", "24"});
  CHECK(r.code == 0);
  CHECK(r.out.find("coverage_fraction") != std::string::npos);
  CHECK(read_pnm(out).width == 64);
  CHECK(std::filesystem::exists(out + ".coverage.pgm"));
}

TEST_CASE("cli exit codes") {
  CHECK(run({}).code == 1);
  CHECK(run({"tops", "fern"}).code == 1);
  CHECK(run({"tops", "fern", "--point", "1;2"}).code == 1);
  CHECK(run({"tops", "fern", "--point", "9,9", "--grid", "64"}).code == 2);
  CHECK(run({"tops", "spiral", "--point", "0,0"}).code == 3);
  CHECK(run({"render", "fern", "--out", scratch("x.ppm"), "--method", "nope"}).code == 1);
  CHECK(run({"render", "fern", "--out", "/nonexistent/dir/x.ppm", "--iters", "1000"}).code == 3);
  CHECK(run({"diagnose", "--from", "fern", "--to", "dragon:0.5,0.5", "--refinement"}).code == 2);
  const Run g = run({"gallery"});
  CHECK(g.code == 0);
  CHECK(g.out.find("square-cts") != std::string::npos);
  CHECK(run({"--help"}).code == 0);
}
