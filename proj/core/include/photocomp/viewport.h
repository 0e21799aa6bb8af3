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

#ifndef PHOTOCOMP_VIEWPORT_H_
#define PHOTOCOMP_VIEWPORT_H_

#include <optional>
#include <string>
#include <string_view>

#include "photocomp/geometry.h"

namespace photocomp {

/// A physical screen. Standard 1024x768 coordinates map onto it with one
/// uniform scale s = min(W / 1024, H / 768) and a centered letterbox offset.
struct ScreenSpec {
  int width = 1024;
  int height = 768;

  double scale() const;
  PointF offset() const;
  Rect bounds() const { return {0, 0, width, height}; }
  std::int64_t area() const { return static_cast<std::int64_t>(width) * height; }

  bool operator==(const ScreenSpec&) const = default;
};

PointF to_screen(const ScreenSpec& screen, PointF standard);
PointF to_standard(const ScreenSpec& screen, PointF on_screen);

/// Parses "WxH" (both positive). Returns nullopt on malformed input.
std::optional<ScreenSpec> parse_screen(std::string_view text);
std::string format_screen(const ScreenSpec& screen);

}  // namespace photocomp

#endif  // PHOTOCOMP_VIEWPORT_H_
