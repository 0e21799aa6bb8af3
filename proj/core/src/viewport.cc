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

#include "photocomp/viewport.h"

#include <algorithm>
#include <charconv>

namespace photocomp {

double ScreenSpec::scale() const {
  return std::min(static_cast<double>(width) / 1024.0,
                  static_cast<double>(height) / 768.0);
}

PointF ScreenSpec::offset() const {
  const double s = scale();
  return {(width - 1024.0 * s) / 2.0, (height - 768.0 * s) / 2.0};
}

PointF to_screen(const ScreenSpec& screen, PointF standard) {
  const double s = screen.scale();
  const PointF o = screen.offset();
  return {standard.x * s + o.x, standard.y * s + o.y};
}

PointF to_standard(const ScreenSpec& screen, PointF on_screen) {
  const double s = screen.scale();
  const PointF o = screen.offset();
  return {(on_screen.x - o.x) / s, (on_screen.y - o.y) / s};
}

std::optional<ScreenSpec> parse_screen(std::string_view text) {
  const auto x = text.find('x');
  if (x == std::string_view::npos) return std::nullopt;
  ScreenSpec spec;
  const auto parse = [](std::string_view part, int& out) {
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), out);
    return ec == std::errc() && ptr == part.data() + part.size() && out > 0;
  };
  if (!parse(text.substr(0, x), spec.width) || !parse(text.substr(x + 1), spec.height)) {
    return std::nullopt;
  }
  return spec;
}

std::string format_screen(const ScreenSpec& screen) {
  return std::to_string(screen.width) + "x" + std::to_string(screen.height);
}

}  // namespace photocomp
