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

#ifndef PHOTOCOMP_RASTERIZER_H_
#define PHOTOCOMP_RASTERIZER_H_

#include <cstdint>
#include <vector>

#include "photocomp/geometry.h"
#include "photocomp/image.h"
#include "photocomp/photo.h"
#include "photocomp/viewport.h"

namespace photocomp {

/// RGB8 output surface at screen resolution, white when created.
class Frame {
 public:
  Frame(int width, int height);
  explicit Frame(const ScreenSpec& screen) : Frame(screen.width, screen.height) {}

  int width() const { return width_; }
  int height() const { return height_; }
  Rect bounds() const { return {0, 0, width_, height_}; }

  void fill_white(const Rect& r);
  std::uint8_t* pixel(int x, int y) {
    return &rgb_[(static_cast<std::size_t>(y) * width_ + x) * 3];
  }
  const std::uint8_t* pixel(int x, int y) const {
    return &rgb_[(static_cast<std::size_t>(y) * width_ + x) * 3];
  }
  const std::vector<std::uint8_t>& rgb() const { return rgb_; }

  /// Opaque RasterImage copy, e.g. for save_ppm.
  RasterImage to_image() const;

  bool operator==(const Frame&) const = default;

 private:
  int width_;
  int height_;
  std::vector<std::uint8_t> rgb_;
};

/// Where a prepared photo lands on a screen.
struct Placement {
  PointF center;          // screen pixels
  Size display;           // standard-viewport pixels
  double screen_scale = 1.0;
  UnitRotation rotation;
  Rect bbox;              // screen pixels, not clipped
};

Placement place_photo(const PhotoObject& photo, const ScreenSpec& screen);

/// Screen bounding box of the photo clipped to the screen; its area is the
/// "drawn pixels" term of the cost model.
Rect screen_damage(const PhotoObject& photo, const ScreenSpec& screen);

/// Source-over blend of one straight-alpha channel:
/// round_half_up(src * a / 255 + dst * (1 - a / 255)), in integers.
inline std::uint8_t blend_channel(std::uint8_t src, std::uint8_t dst, std::uint8_t a) {
  const int num = 2 * (src * a + dst * (255 - a)) + 255;
  return static_cast<std::uint8_t>(num / 510);
}

/// Composites `prepared` (the cropped, effected photo) onto `frame` using
/// nearest-neighbour inverse mapping. Only pixels inside `clip` are touched.
void composite_photo(Frame& frame, const RasterImage& prepared, const Placement& placement,
                     const Rect& clip);

/// Writes the photo's straight RGBA samples into a transparent layer (the
/// interactive foreground), replacing what was there.
void draw_to_layer(RasterImage& layer, const RasterImage& prepared, const Placement& placement,
                   const Rect& clip);

/// Source-over of `layer` onto `frame` inside `clip`.
void composite_layer(Frame& frame, const RasterImage& layer, const Rect& clip);

/// Sets every pixel of `layer` inside `r` to transparent black.
void clear_layer(RasterImage& layer, const Rect& r);

}  // namespace photocomp

#endif  // PHOTOCOMP_RASTERIZER_H_
