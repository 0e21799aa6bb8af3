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

#ifndef PHOTOCOMP_PHOTO_H_
#define PHOTOCOMP_PHOTO_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "photocomp/effect_spec.h"
#include "photocomp/geometry.h"

namespace photocomp {

class PhotoError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Abstract render object shared by every backend. Geometry lives in
/// standard-viewport coordinates; backends only see the result of the
/// canonical pipeline crop -> effects -> scale -> rotate -> translate.
struct PhotoObject {
  std::string id;
  std::string source;
  /// Dimensions of the source image. Not persisted: resolved from the image
  /// store whenever a scene is loaded.
  Size source_size;
  /// Source-space crop, always inside `source_size` when present.
  std::optional<Rect> crop;
  double scale = 1.0;
  /// Accumulated degrees; see reported_angle() for the [0, 360) form.
  double angle = 0.0;
  PointF center;
  EffectChain effects;
  int z = 0;

  bool operator==(const PhotoObject&) const = default;
};

/// Source rectangle actually used: the crop, or the whole source.
Rect effective_crop(const PhotoObject& photo);

/// Size of the image handed to the rasterizer (crop, then effects).
Size prepared_size(const PhotoObject& photo);

/// round_half_up(prepared size * scale), each side at least 1.
Size display_size(const PhotoObject& photo);

/// Angle normalized to [0, 360).
double reported_angle(const PhotoObject& photo);

/// Sets the crop to `rect` intersected with the source bounds. Throws
/// PhotoError if `rect` is degenerate or misses the source entirely.
PhotoObject crop_photo(PhotoObject photo, const Rect& rect);

namespace action {
struct Move {
  PointF center;
};
struct Rotate {
  double degrees = 0.0;
};
struct Scale {
  double factor = 1.0;
};
}  // namespace action

using PhotoAction = std::variant<action::Move, action::Rotate, action::Scale>;

/// Applies one geometric action; each action writes exactly one field.
/// Throws PhotoError for a non-positive scale factor.
PhotoObject transform_photo(PhotoObject photo, const PhotoAction& action);

/// Real-valued extents of the rotated display rectangle:
/// (w|cos| + h|sin|, w|sin| + h|cos|).
struct Extents {
  double width = 0.0;
  double height = 0.0;
};
Extents rotated_extents(Size display, double angle_degrees);

/// Axis-aligned bounding box of the rotated display rectangle about its
/// center, in standard coordinates, rounded outward to whole pixels.
Rect photo_bbox(const PhotoObject& photo);

/// Whole-pixel size of the rotated footprint: ceil of rotated_extents.
Size photo_extents(const PhotoObject& photo);

}  // namespace photocomp

#endif  // PHOTOCOMP_PHOTO_H_
