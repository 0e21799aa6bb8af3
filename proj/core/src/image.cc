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

#include "photocomp/image.h"

#include <cstring>
#include <string>
#include <utility>

namespace photocomp {
namespace {

void check_dimensions(int width, int height) {
  if (width <= 0 || height <= 0 || width > RasterImage::kMaxDimension ||
      height > RasterImage::kMaxDimension) {
    throw ImageError("unsupported image dimensions " + std::to_string(width) +
                     "x" + std::to_string(height));
  }
}

}  // namespace

RasterImage::RasterImage(int width, int height, Rgba fill)
    : width_(width), height_(height) {
  check_dimensions(width, height);
  pixels_.resize(static_cast<std::size_t>(width) * height * 4);
  for (std::size_t i = 0; i < pixels_.size(); i += 4) {
    pixels_[i] = fill.r;
    pixels_[i + 1] = fill.g;
    pixels_[i + 2] = fill.b;
    pixels_[i + 3] = fill.a;
  }
}

RasterImage::RasterImage(int width, int height, std::vector<std::uint8_t> rgba)
    : width_(width), height_(height), pixels_(std::move(rgba)) {
  check_dimensions(width, height);
  if (pixels_.size() != static_cast<std::size_t>(width) * height * 4) {
    throw ImageError("pixel buffer length does not match " +
                     std::to_string(width) + "x" + std::to_string(height));
  }
}

RasterImage RasterImage::cropped(const Rect& r) const {
  if (r.empty() || r.x < 0 || r.y < 0 || r.right() > width_ ||
      r.bottom() > height_) {
    throw ImageError("crop rectangle outside image");
  }
  std::vector<std::uint8_t> out(static_cast<std::size_t>(r.w) * r.h * 4);
  const std::size_t row_bytes = static_cast<std::size_t>(r.w) * 4;
  for (int y = 0; y < r.h; ++y) {
    std::memcpy(&out[y * row_bytes], &pixels_[offset(r.x, r.y + y)], row_bytes);
  }
  return RasterImage(r.w, r.h, std::move(out));
}

}  // namespace photocomp
