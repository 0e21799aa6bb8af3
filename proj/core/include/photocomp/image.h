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

#ifndef PHOTOCOMP_IMAGE_H_
#define PHOTOCOMP_IMAGE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "photocomp/geometry.h"

namespace photocomp {

struct Rgba {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;
  std::uint8_t a = 255;
  bool operator==(const Rgba&) const = default;
};

/// Thrown when an image would exceed the supported dimensions or the pixel
/// buffer does not match the declared size.
class ImageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Owned RGBA8 pixel grid, row-major, straight (non-premultiplied) alpha.
/// Invariant: pixels().size() == width * height * 4, width and height > 0.
class RasterImage {
 public:
  static constexpr int kMaxDimension = 1 << 15;

  RasterImage(int width, int height, Rgba fill = Rgba{0, 0, 0, 255});
  RasterImage(int width, int height, std::vector<std::uint8_t> rgba);

  int width() const { return width_; }
  int height() const { return height_; }
  Size size() const { return {width_, height_}; }
  std::int64_t area() const { return size().area(); }

  Rgba at(int x, int y) const {
    const std::uint8_t* p = &pixels_[offset(x, y)];
    return {p[0], p[1], p[2], p[3]};
  }
  void set(int x, int y, Rgba c) {
    std::uint8_t* p = &pixels_[offset(x, y)];
    p[0] = c.r;
    p[1] = c.g;
    p[2] = c.b;
    p[3] = c.a;
  }

  std::span<const std::uint8_t> pixels() const { return pixels_; }
  std::span<std::uint8_t> pixels() { return pixels_; }

  /// Copy of the sub-rectangle `r`, which must lie inside the image.
  RasterImage cropped(const Rect& r) const;

  bool operator==(const RasterImage&) const = default;

 private:
  std::size_t offset(int x, int y) const {
    return (static_cast<std::size_t>(y) * width_ + x) * 4;
  }

  int width_;
  int height_;
  std::vector<std::uint8_t> pixels_;
};

}  // namespace photocomp

#endif  // PHOTOCOMP_IMAGE_H_
