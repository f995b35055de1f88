#include "fractops/ppm.hpp"

#include <cctype>
#include <fstream>
#include <iterator>

#include "fractops/error.hpp"

namespace fractops {

namespace {

class HeaderReader {
 public:
  explicit HeaderReader(const std::vector<std::uint8_t>& data) : data_(data) {}

  void skip_space_and_comments() {
    while (pos_ < data_.size()) {
      if (data_[pos_] == '#') {
        while (pos_ < data_.size() && data_[pos_] != '\n') ++pos_;
      } else if (std::isspace(data_[pos_])) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  long number() {
    skip_space_and_comments();
    long value = 0;
    std::size_t digits = 0;
    while (pos_ < data_.size() && std::isdigit(data_[pos_])) {
      value = value * 10 + (data_[pos_] - '0');
      if (value > 1'000'000'000L) throw IoError("PNM header number too large");
      ++pos_;
      ++digits;
    }
    if (digits == 0) throw IoError("malformed PNM header");
    return value;
  }

  /// Exactly one whitespace byte separates the header from the payload.
  void single_space() {
    if (pos_ >= data_.size() || !std::isspace(data_[pos_])) throw IoError("malformed PNM header");
    ++pos_;
  }

  std::size_t pos() const { return pos_; }
  void advance(std::size_t n) { pos_ += n; }

 private:
  const std::vector<std::uint8_t>& data_;
  std::size_t pos_ = 0;
};

}  // namespace

Image8 parse_pnm(const std::vector<std::uint8_t>& data) {
  if (data.size() < 2 || data[0] != 'P' || (data[1] != '6' && data[1] != '5')) {
    throw IoError("not a binary PPM/PGM file (expected P6 or P5)");
  }
  HeaderReader reader(data);
  reader.advance(2);
  Image8 img;
  img.channels = data[1] == '6' ? 3 : 1;
  const long w = reader.number();
  const long h = reader.number();
  const long maxval = reader.number();
  if (w <= 0 || h <= 0) throw IoError("PNM dimensions must be positive");
  if (maxval != 255) throw IoError("PNM maxval must be 255, got " + std::to_string(maxval));
  reader.single_space();
  img.width = static_cast<int>(w);
  img.height = static_cast<int>(h);
  const std::size_t payload = static_cast<std::size_t>(w) * static_cast<std::size_t>(h) * img.channels;
  if (data.size() - reader.pos() < payload) throw IoError("PNM payload is truncated");
  img.bytes.assign(data.begin() + static_cast<std::ptrdiff_t>(reader.pos()),
                   data.begin() + static_cast<std::ptrdiff_t>(reader.pos() + payload));
  return img;
}

std::vector<std::uint8_t> encode_pnm(const Image8& image) {
  if (image.channels != 1 && image.channels != 3) throw IoError("PNM images have 1 or 3 channels");
  const std::size_t expected =
      static_cast<std::size_t>(image.width) * static_cast<std::size_t>(image.height) * image.channels;
  if (image.bytes.size() != expected) throw IoError("image byte count does not match its dimensions");
  const std::string header = std::string(image.channels == 3 ? "P6" : "P5") + "\n" + std::to_string(image.width) +
                             " " + std::to_string(image.height) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), image.bytes.begin(), image.bytes.end());
  return out;
}

Image8 read_pnm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_pnm(data);
}

void write_pnm(const std::filesystem::path& path, const Image8& image) {
  const auto bytes = encode_pnm(image);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

RasterPicture ppm_read(const std::filesystem::path& path, const Rect& viewport) {
  const Image8 img = read_pnm(path);
  if (img.channels != 3) throw IoError("'" + path.string() + "' is not a P6 picture");
  RasterPicture pic(PixelGrid(img.width, img.height, viewport));
  for (std::size_t k = 0; k < pic.pixels.size(); ++k) {
    pic.pixels[k] = {img.bytes[3 * k], img.bytes[3 * k + 1], img.bytes[3 * k + 2]};
    pic.coverage[k] = 1;
  }
  return pic;
}

Image8 picture_image(const RasterPicture& picture) {
  Image8 img{picture.grid.width(), picture.grid.height(), 3, {}};
  img.bytes.resize(picture.pixels.size() * 3, 0);
  for (std::size_t k = 0; k < picture.pixels.size(); ++k) {
    if (!picture.coverage[k]) continue;
    img.bytes[3 * k] = picture.pixels[k][0];
    img.bytes[3 * k + 1] = picture.pixels[k][1];
    img.bytes[3 * k + 2] = picture.pixels[k][2];
  }
  return img;
}

Image8 coverage_image(const RasterPicture& picture) {
  Image8 img{picture.grid.width(), picture.grid.height(), 1, {}};
  img.bytes.resize(picture.coverage.size());
  for (std::size_t k = 0; k < picture.coverage.size(); ++k) img.bytes[k] = picture.coverage[k] ? 255 : 0;
  return img;
}

Image8 mask_image(const Mask& m) {
  Image8 img{m.grid().width(), m.grid().height(), 3, {}};
  img.bytes.resize(m.size() * 3, 0);
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (m.test(k)) img.bytes[3 * k] = img.bytes[3 * k + 1] = img.bytes[3 * k + 2] = 255;
  }
  return img;
}

void ppm_write(const std::filesystem::path& path, const RasterPicture& picture,
               const std::filesystem::path& coverage_path) {
  write_pnm(path, picture_image(picture));
  if (!coverage_path.empty()) write_pnm(coverage_path, coverage_image(picture));
}

}  // namespace fractops
