// Copyright 2026 The Photocomp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "photocomp/ppm.h"

#include <cctype>
#include <fstream>
#include <iterator>
#include <optional>
#include <string_view>

namespace photocomp {
namespace {

struct NetpbmHeader {
  int width = 0;
  int height = 0;
  std::size_t data_offset = 0;
};

class HeaderReader {
 public:
  explicit HeaderReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  void expect_magic(std::string_view magic) {
    if (bytes_.size() < 2 || bytes_[0] != magic[0] || bytes_[1] != magic[1]) {
      throw PpmError(PpmErrorCode::kWrongMagic,
                     "expected '" + std::string(magic) + "' magic number");
    }
    pos_ = 2;
  }

  // Reads one decimal header field, skipping whitespace and '#' comments.
  int read_int(const char* field) {
    skip_separators();
    if (pos_ >= bytes_.size()) {
      throw PpmError(PpmErrorCode::kMalformedHeader,
                     std::string("header ends before ") + field);
    }
    long value = 0;
    std::size_t digits = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      value = value * 10 + (bytes_[pos_] - '0');
      if (value > 1'000'000'000) {
        throw PpmError(PpmErrorCode::kMalformedHeader,
                       std::string(field) + " out of range");
      }
      ++pos_;
      ++digits;
    }
    if (digits == 0) {
      throw PpmError(PpmErrorCode::kMalformedHeader,
                     std::string("non-numeric ") + field);
    }
    return static_cast<int>(value);
  }

  // Exactly one whitespace byte separates maxval from the raster.
  std::size_t finish() {
    if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_])) {
      throw PpmError(PpmErrorCode::kMalformedHeader,
                     "missing separator after maxval");
    }
    return pos_ + 1;
  }

 private:
  void skip_separators() {
    while (pos_ < bytes_.size()) {
      if (std::isspace(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

NetpbmHeader read_header(std::span<const std::uint8_t> bytes,
                         std::string_view magic, std::size_t channels) {
  HeaderReader reader(bytes);
  reader.expect_magic(magic);
  NetpbmHeader h;
  h.width = reader.read_int("width");
  h.height = reader.read_int("height");
  const int maxval = reader.read_int("maxval");
  if (h.width <= 0 || h.height <= 0 || h.width > RasterImage::kMaxDimension ||
      h.height > RasterImage::kMaxDimension) {
    throw PpmError(PpmErrorCode::kMalformedHeader, "invalid dimensions");
  }
  if (maxval != 255) {
    throw PpmError(PpmErrorCode::kUnsupportedMaxval,
                   "maxval " + std::to_string(maxval) + " (only 255 supported)");
  }
  h.data_offset = reader.finish();
  const std::size_t need =
      static_cast<std::size_t>(h.width) * h.height * channels;
  if (bytes.size() - h.data_offset < need) {
    throw PpmError(PpmErrorCode::kTruncated,
                   "raster has " + std::to_string(bytes.size() - h.data_offset) +
                       " bytes, expected " + std::to_string(need));
  }
  return h;
}

std::vector<std::uint8_t> header_bytes(std::string_view magic, Size size) {
  const std::string text = std::string(magic) + "\n" +
                           std::to_string(size.width) + " " +
                           std::to_string(size.height) + "\n255\n";
  return {text.begin(), text.end()};
}

}  // namespace

RasterImage decode_ppm(std::span<const std::uint8_t> bytes) {
  const NetpbmHeader h = read_header(bytes, "P6", 3);
  const std::size_t n = static_cast<std::size_t>(h.width) * h.height;
  std::vector<std::uint8_t> rgba(n * 4);
  const std::uint8_t* src = bytes.data() + h.data_offset;
  for (std::size_t i = 0; i < n; ++i) {
    rgba[i * 4] = src[i * 3];
    rgba[i * 4 + 1] = src[i * 3 + 1];
    rgba[i * 4 + 2] = src[i * 3 + 2];
    rgba[i * 4 + 3] = 255;
  }
  return RasterImage(h.width, h.height, std::move(rgba));
}

std::vector<std::uint8_t> encode_ppm(const RasterImage& image) {
  std::vector<std::uint8_t> out = header_bytes("P6", image.size());
  const auto px = image.pixels();
  out.reserve(out.size() + static_cast<std::size_t>(image.area()) * 3);
  for (std::size_t i = 0; i < px.size(); i += 4) {
    out.push_back(px[i]);
    out.push_back(px[i + 1]);
    out.push_back(px[i + 2]);
  }
  return out;
}

RasterImage load_ppm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw PpmError(PpmErrorCode::kIo, "cannot open " + path.string());
  }
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  return decode_ppm(bytes);
}

void save_ppm(const RasterImage& image, const std::filesystem::path& path) {
  const std::vector<std::uint8_t> bytes = encode_ppm(image);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw PpmError(PpmErrorCode::kIo, "cannot write " + path.string());
  }
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    throw PpmError(PpmErrorCode::kIo, "write failed for " + path.string());
  }
}

std::vector<std::uint8_t> encode_alpha_pgm(const RasterImage& image) {
  std::vector<std::uint8_t> out = header_bytes("P5", image.size());
  const auto px = image.pixels();
  for (std::size_t i = 3; i < px.size(); i += 4) out.push_back(px[i]);
  return out;
}

void apply_alpha_pgm(std::span<const std::uint8_t> bytes, RasterImage& image) {
  const NetpbmHeader h = read_header(bytes, "P5", 1);
  if (h.width != image.width() || h.height != image.height()) {
    throw PpmError(PpmErrorCode::kMalformedHeader,
                   "alpha plane size does not match image");
  }
  auto px = image.pixels();
  const std::uint8_t* src = bytes.data() + h.data_offset;
  for (std::size_t i = 0; i * 4 < px.size(); ++i) px[i * 4 + 3] = src[i];
}

bool is_opaque(const RasterImage& image) {
  const auto px = image.pixels();
  for (std::size_t i = 3; i < px.size(); i += 4) {
    if (px[i] != 255) return false;
  }
  return true;
}

}  // namespace photocomp
