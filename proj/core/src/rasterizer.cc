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

#include "photocomp/rasterizer.h"

#include <algorithm>
#include <cmath>

namespace photocomp {
namespace {

// Calls write(x, y, sample) for every screen pixel in `clip` whose center
// falls inside the rotated display rectangle.
template <class Write>
void rasterize(const RasterImage& src, const Placement& pl, const Rect& clip, Write write) {
  const Rect area = intersect(pl.bbox, clip);
  if (area.empty()) return;
  const double dw = pl.display.width;
  const double dh = pl.display.height;
  const double inv_s = 1.0 / pl.screen_scale;
  const double cs = pl.rotation.cos;
  const double sn = pl.rotation.sin;
  const int pw = src.width();
  const int ph = src.height();
  const double sx_per_u = pw / dw;
  const double sy_per_v = ph / dh;
  for (int py = area.y; py < area.bottom(); ++py) {
    const double dy = py + 0.5 - pl.center.y;
    for (int px = area.x; px < area.right(); ++px) {
      const double dx = px + 0.5 - pl.center.x;
      const double u = (dx * cs + dy * sn) * inv_s + dw / 2.0;
      const double v = (-dx * sn + dy * cs) * inv_s + dh / 2.0;
      if (u < 0.0 || u >= dw || v < 0.0 || v >= dh) continue;
      const int sx = std::min(pw - 1, static_cast<int>(u * sx_per_u));
      const int sy = std::min(ph - 1, static_cast<int>(v * sy_per_v));
      write(px, py, src.at(sx, sy));
    }
  }
}

}  // namespace

Frame::Frame(int width, int height)
    : width_(width), height_(height),
      rgb_(static_cast<std::size_t>(width) * height * 3, 255) {}

void Frame::fill_white(const Rect& r) {
  const Rect area = intersect(r, bounds());
  for (int y = area.y; y < area.bottom(); ++y) {
    std::fill_n(pixel(area.x, y), static_cast<std::size_t>(area.w) * 3, 255);
  }
}

RasterImage Frame::to_image() const {
  std::vector<std::uint8_t> rgba(static_cast<std::size_t>(width_) * height_ * 4);
  for (std::size_t i = 0, n = static_cast<std::size_t>(width_) * height_; i < n; ++i) {
    rgba[i * 4] = rgb_[i * 3];
    rgba[i * 4 + 1] = rgb_[i * 3 + 1];
    rgba[i * 4 + 2] = rgb_[i * 3 + 2];
    rgba[i * 4 + 3] = 255;
  }
  return RasterImage(width_, height_, std::move(rgba));
}

Placement place_photo(const PhotoObject& photo, const ScreenSpec& screen) {
  Placement pl;
  pl.center = to_screen(screen, photo.center);
  pl.display = display_size(photo);
  pl.screen_scale = screen.scale();
  pl.rotation = rotation_for_degrees(photo.angle);
  const Extents e = rotated_extents(pl.display, photo.angle);
  const double hw = e.width * pl.screen_scale / 2.0;
  const double hh = e.height * pl.screen_scale / 2.0;
  pl.bbox = outward_rect(pl.center.x - hw, pl.center.y - hh, pl.center.x + hw, pl.center.y + hh);
  return pl;
}

Rect screen_damage(const PhotoObject& photo, const ScreenSpec& screen) {
  return intersect(place_photo(photo, screen).bbox, screen.bounds());
}

void composite_photo(Frame& frame, const RasterImage& prepared, const Placement& placement,
                     const Rect& clip) {
  rasterize(prepared, placement, intersect(clip, frame.bounds()),
            [&frame](int x, int y, Rgba c) {
              std::uint8_t* d = frame.pixel(x, y);
              if (c.a == 255) {
                d[0] = c.r;
                d[1] = c.g;
                d[2] = c.b;
              } else {
                d[0] = blend_channel(c.r, d[0], c.a);
                d[1] = blend_channel(c.g, d[1], c.a);
                d[2] = blend_channel(c.b, d[2], c.a);
              }
            });
}

void draw_to_layer(RasterImage& layer, const RasterImage& prepared, const Placement& placement,
                   const Rect& clip) {
  rasterize(prepared, placement, intersect(clip, Rect{0, 0, layer.width(), layer.height()}),
            [&layer](int x, int y, Rgba c) { layer.set(x, y, c); });
}

void composite_layer(Frame& frame, const RasterImage& layer, const Rect& clip) {
  const Rect area = intersect(intersect(clip, frame.bounds()),
                              Rect{0, 0, layer.width(), layer.height()});
  for (int y = area.y; y < area.bottom(); ++y) {
    for (int x = area.x; x < area.right(); ++x) {
      const Rgba c = layer.at(x, y);
      if (c.a == 0) continue;
      std::uint8_t* d = frame.pixel(x, y);
      d[0] = blend_channel(c.r, d[0], c.a);
      d[1] = blend_channel(c.g, d[1], c.a);
      d[2] = blend_channel(c.b, d[2], c.a);
    }
  }
}

void clear_layer(RasterImage& layer, const Rect& r) {
  const Rect area = intersect(r, Rect{0, 0, layer.width(), layer.height()});
  for (int y = area.y; y < area.bottom(); ++y) {
    for (int x = area.x; x < area.right(); ++x) layer.set(x, y, Rgba{0, 0, 0, 0});
  }
}

}  // namespace photocomp
