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

#ifndef PHOTOCOMP_CAPABILITY_H_
#define PHOTOCOMP_CAPABILITY_H_

#include <array>
#include <optional>
#include <string_view>

#include "photocomp/effect_spec.h"

namespace photocomp {

/// raster: immediate mode, clears and redraws the whole surface.
/// scenegraph / legacy: retained mode, recomposite damage only.
enum class BackendKind { kRaster, kSceneGraph, kLegacy };

inline constexpr std::array<BackendKind, 3> kAllBackends = {
    BackendKind::kRaster, BackendKind::kSceneGraph, BackendKind::kLegacy};

std::string_view backend_name(BackendKind kind);
std::optional<BackendKind> backend_from_name(std::string_view name);

enum class Capability { kSupported, kFallbackNeeded };

// Per-backend effect support.
//   raster:     everything
//   scenegraph: no emboss, red-eye or flips (undetermined entries count as
//               unsupported)
//   legacy:     no hue, saturate, sepia, sharpen or red-eye
constexpr Capability capability_check(BackendKind backend, EffectKind effect) {
  using enum EffectKind;
  bool unsupported = false;
  switch (backend) {
    case BackendKind::kRaster:
      break;
    case BackendKind::kSceneGraph:
      unsupported = effect == kEmboss || effect == kRedEye || effect == kFlipH || effect == kFlipV;
      break;
    case BackendKind::kLegacy:
      unsupported = effect == kHue || effect == kSaturate || effect == kSepia ||
                    effect == kSharpen || effect == kRedEye;
      break;
  }
  return unsupported ? Capability::kFallbackNeeded : Capability::kSupported;
}

constexpr bool supports(BackendKind backend, EffectKind effect) {
  return capability_check(backend, effect) == Capability::kSupported;
}

}  // namespace photocomp

#endif  // PHOTOCOMP_CAPABILITY_H_
