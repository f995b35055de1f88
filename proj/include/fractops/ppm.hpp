#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "fractops/raster.hpp"

namespace fractops {

/// An 8-bit image as stored on disk: row 0 first, `channels` bytes per pixel.
struct Image8 {
  int width = 0;
  int height = 0;
  int channels = 3;
  std::vector<std::uint8_t> bytes;
};

/// Binary P6 (channels 3) or P5 (channels 1) with maxval 255.
Image8 parse_pnm(const std::vector<std::uint8_t>& data);
std::vector<std::uint8_t> encode_pnm(const Image8& image);

Image8 read_pnm(const std::filesystem::path& path);
void write_pnm(const std::filesystem::path& path, const Image8& image);

/// Reads a P6 picture onto a grid over `viewport`; every pixel is covered.
RasterPicture ppm_read(const std::filesystem::path& path, const Rect& viewport);

/// Writes the colors (uncovered pixels black) and, when `coverage_path` is
/// not empty, the coverage as a P5 file with 0/255.
void ppm_write(const std::filesystem::path& path, const RasterPicture& picture,
               const std::filesystem::path& coverage_path = {});

/// White where set, black elsewhere.
Image8 mask_image(const Mask& m);
Image8 picture_image(const RasterPicture& picture);
Image8 coverage_image(const RasterPicture& picture);

}  // namespace fractops
