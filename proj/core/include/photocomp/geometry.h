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

#ifndef PHOTOCOMP_GEOMETRY_H_
#define PHOTOCOMP_GEOMETRY_H_

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace photocomp {

struct Size {
  int width = 0;
  int height = 0;

  std::int64_t area() const {
    return static_cast<std::int64_t>(width) * height;
  }
  bool operator==(const Size&) const = default;
};

/// Integer rectangle, half-open: covers [x, x + w) x [y, y + h).
struct Rect {
  int x = 0;
  int y = 0;
  int w = 0;
  int h = 0;

  bool empty() const { return w <= 0 || h <= 0; }
  std::int64_t area() const {
    return empty() ? 0 : static_cast<std::int64_t>(w) * h;
  }
  int right() const { return x + w; }
  int bottom() const { return y + h; }
  bool contains(int px, int py) const {
    return px >= x && px < x + w && py >= y && py < y + h;
  }
  bool operator==(const Rect&) const = default;
};

struct PointF {
  double x = 0.0;
  double y = 0.0;
  bool operator==(const PointF&) const = default;
};

inline Rect intersect(const Rect& a, const Rect& b) {
  const int x0 = std::max(a.x, b.x);
  const int y0 = std::max(a.y, b.y);
  const int x1 = std::min(a.right(), b.right());
  const int y1 = std::min(a.bottom(), b.bottom());
  if (x1 <= x0 || y1 <= y0) return Rect{x0, y0, 0, 0};
  return Rect{x0, y0, x1 - x0, y1 - y0};
}

/// Round half up (towards +inf), the only rounding mode used for pixel math.
inline double round_half_up(double v) { return std::floor(v + 0.5); }

/// Smallest integer rectangle containing the real box [x0, x1] x [y0, y1].
/// Coordinates within 1e-9 of an integer snap to it first.
inline Rect outward_rect(double x0, double y0, double x1, double y1) {
  constexpr double kSnap = 1e-9;
  const int left = static_cast<int>(std::floor(x0 + kSnap));
  const int top = static_cast<int>(std::floor(y0 + kSnap));
  const int right = static_cast<int>(std::ceil(x1 - kSnap));
  const int bottom = static_cast<int>(std::ceil(y1 - kSnap));
  return Rect{left, top, right - left, bottom - top};
}

inline std::uint8_t clamp_channel(double v) {
  return static_cast<std::uint8_t>(std::clamp(v, 0.0, 255.0));
}

inline std::uint8_t clamp_channel(int v) {
  return static_cast<std::uint8_t>(std::clamp(v, 0, 255));
}

// Cosine and sine of an angle in degrees. Multiples of 90 are exact so that
// axis-aligned photos rasterize and measure without drift.
struct UnitRotation {
  double cos = 1.0;
  double sin = 0.0;
};

inline UnitRotation rotation_for_degrees(double degrees) {
  double d = std::fmod(degrees, 360.0);
  if (d < 0) d += 360.0;
  if (d == 0.0) return {1.0, 0.0};
  if (d == 90.0) return {0.0, 1.0};
  if (d == 180.0) return {-1.0, 0.0};
  if (d == 270.0) return {0.0, -1.0};
  const double r = d * (3.14159265358979323846 / 180.0);
  return {std::cos(r), std::sin(r)};
}

}  // namespace photocomp

#endif  // PHOTOCOMP_GEOMETRY_H_
