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

// Random scene generation shared by backend tests and the acceptance suite.

#ifndef PHOTOCOMP_TESTS_SCENES_H_
#define PHOTOCOMP_TESTS_SCENES_H_

#include <random>
#include <string>
#include <vector>

#include "photocomp/capability.h"
#include "photocomp/image_store.h"
#include "photocomp/scene.h"

namespace photocomp::testing_support {

inline RasterImage noise_image(std::mt19937& rng, int w, int h, bool with_alpha = false) {
  RasterImage img(w, h);
  std::uniform_int_distribution<int> byte(0, 255);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      img.set(x, y, {static_cast<std::uint8_t>(byte(rng)), static_cast<std::uint8_t>(byte(rng)),
                     static_cast<std::uint8_t>(byte(rng)),
                     static_cast<std::uint8_t>(with_alpha ? byte(rng) : 255)});
    }
  }
  return img;
}

// Effects with representative non-identity parameters.
inline EffectSpec sample_effect(std::mt19937& rng, EffectKind kind, Size input) {
  switch (kind) {
    case EffectKind::kBrightness: return fx::Brightness{static_cast<int>(rng() % 200) - 100};
    case EffectKind::kContrast: return fx::Contrast{0.5 + (rng() % 100) / 50.0};
    case EffectKind::kHue: return fx::Hue{static_cast<double>(rng() % 360)};
    case EffectKind::kSaturate: return fx::Saturate{(rng() % 300) / 100.0};
    case EffectKind::kBlackWhite: return fx::BlackWhite{static_cast<int>(rng() % 256)};
    case EffectKind::kOpacity: return fx::Opacity{(rng() % 101) / 100.0};
    case EffectKind::kBorder:
      return fx::Border{static_cast<int>(rng() % 5),
                        Rgba{static_cast<std::uint8_t>(rng()), static_cast<std::uint8_t>(rng()),
                             static_cast<std::uint8_t>(rng()), static_cast<std::uint8_t>(rng())}};
    case EffectKind::kRedEye:
      return fx::RedEye{{0, 0, std::max(1, input.width / 2), std::max(1, input.height / 2)}};
    default: return default_effect(kind);
  }
}

// Registers sources s0..s3 in `store` and returns a scene of up to
// `max_photos` photos whose effects every backend in `backends` supports.
inline SceneDocument random_scene(std::mt19937& rng, ImageStore& store, int max_photos,
                                  const std::vector<BackendKind>& backends) {
  const Size sources[] = {{40, 30}, {64, 48}, {90, 60}, {33, 77}};
  for (int i = 0; i < 4; ++i) {
    const std::string key = "s" + std::to_string(i);
    if (!store.contains(key)) store.put(key, noise_image(rng, sources[i].width, sources[i].height));
  }
  std::vector<EffectKind> allowed;
  for (EffectKind k : kAllEffectKinds) {
    bool ok = true;
    for (BackendKind b : backends) ok = ok && supports(b, k);
    if (ok) allowed.push_back(k);
  }
  std::uniform_real_distribution<double> xy(-50, 1074), ang(-360, 360), sc(0.3, 3.0);
  SceneDocument scene(static_cast<int>(rng() % 5));
  const int n = 1 + static_cast<int>(rng() % max_photos);
  for (int i = 0; i < n; ++i) {
    const int src = static_cast<int>(rng() % 4);
    PhotoObject p;
    p.id = "p" + std::to_string(i);
    p.source = "s" + std::to_string(src);
    p.source_size = sources[src];
    p.center = {xy(rng), xy(rng) * 0.75};
    if (rng() % 2) p.angle = ang(rng);
    if (rng() % 4 == 0) p.angle = 90.0 * static_cast<int>(rng() % 4);
    if (rng() % 2) p.scale = sc(rng);
    if (rng() % 3 == 0) p = crop_photo(p, {static_cast<int>(rng() % 20), static_cast<int>(rng() % 20), 25, 20});
    Size cur{effective_crop(p).w, effective_crop(p).h};
    for (int e = static_cast<int>(rng() % 3); e > 0; --e) {
      const EffectSpec spec = sample_effect(rng, allowed[rng() % allowed.size()], cur);
      cur = effect_output_size(spec, cur);
      p.effects.push_back(spec);
    }
    scene.add(p);
    if (rng() % 4 == 0) scene.send_to_back(p.id);
  }
  return scene;
}

}  // namespace photocomp::testing_support

#endif  // PHOTOCOMP_TESTS_SCENES_H_
