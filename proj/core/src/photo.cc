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

#include "photocomp/photo.h"

#include <algorithm>
#include <cmath>

#include "photocomp/effects.h"

namespace photocomp {

Rect effective_crop(const PhotoObject& photo) {
  if (photo.crop) return *photo.crop;
  return Rect{0, 0, photo.source_size.width, photo.source_size.height};
}

Size prepared_size(const PhotoObject& photo) {
  const Rect c = effective_crop(photo);
  return chain_output_size(Size{c.w, c.h}, photo.effects);
}

Size display_size(const PhotoObject& photo) {
  const Size p = prepared_size(photo);
  const auto side = [&](int n) {
    return std::max(1, static_cast<int>(round_half_up(n * photo.scale)));
  };
  return {side(p.width), side(p.height)};
}

double reported_angle(const PhotoObject& photo) {
  double a = std::fmod(photo.angle, 360.0);
  if (a < 0) a += 360.0;
  return a >= 360.0 ? 0.0 : a;
}

PhotoObject crop_photo(PhotoObject photo, const Rect& rect) {
  if (rect.w <= 0 || rect.h <= 0) {
    throw PhotoError("crop rectangle must have positive width and height");
  }
  const Rect bounds{0, 0, photo.source_size.width, photo.source_size.height};
  const Rect clipped = intersect(rect, bounds);
  if (clipped.empty()) {
    throw PhotoError("crop rectangle does not intersect the source image");
  }
  photo.crop = clipped;
  return photo;
}

PhotoObject transform_photo(PhotoObject photo, const PhotoAction& act) {
  if (const auto* m = std::get_if<action::Move>(&act)) {
    photo.center = m->center;
  } else if (const auto* r = std::get_if<action::Rotate>(&act)) {
    photo.angle += r->degrees;
  } else if (const auto* s = std::get_if<action::Scale>(&act)) {
    if (!(s->factor > 0.0) || !std::isfinite(s->factor)) {
      throw PhotoError("scale factor must be positive");
    }
    photo.scale *= s->factor;
  }
  return photo;
}

Extents rotated_extents(Size display, double angle_degrees) {
  const UnitRotation rot = rotation_for_degrees(angle_degrees);
  const double c = std::fabs(rot.cos);
  const double s = std::fabs(rot.sin);
  return {display.width * c + display.height * s,
          display.width * s + display.height * c};
}

Rect photo_bbox(const PhotoObject& photo) {
  const Extents e = rotated_extents(display_size(photo), photo.angle);
  return outward_rect(photo.center.x - e.width / 2, photo.center.y - e.height / 2,
                      photo.center.x + e.width / 2, photo.center.y + e.height / 2);
}

Size photo_extents(const PhotoObject& photo) {
  const Extents e = rotated_extents(display_size(photo), photo.angle);
  const Rect r = outward_rect(0, 0, e.width, e.height);
  return {r.w, r.h};
}

}  // namespace photocomp
