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

#ifndef PHOTOCOMP_EFFECTS_H_
#define PHOTOCOMP_EFFECTS_H_

#include <array>
#include <cstdint>
#include <span>

#include "photocomp/effect_spec.h"
#include "photocomp/image.h"

namespace photocomp {

/// 3x3 convolution kernel. Each RGB output channel is
/// clamp(round_half_up(sum(w_i * c_i) / divisor + bias), 0, 255); alpha is
/// copied. Weights are row-major, top-left first.
struct Kernel3x3 {
  std::array<double, 9> weights{};
  double divisor = 1.0;
  double bias = 0.0;

  static Kernel3x3 identity() { return {{0, 0, 0, 0, 1, 0, 0, 0, 0}, 1, 0}; }
  static Kernel3x3 box_blur() { return {{1, 1, 1, 1, 1, 1, 1, 1, 1}, 9, 0}; }
  static Kernel3x3 sharpen() { return {{0, -1, 0, -1, 5, -1, 0, -1, 0}, 1, 0}; }
  static Kernel3x3 emboss() { return {{-2, -1, 0, -1, 1, 1, 0, 1, 2}, 1, 128}; }
};

/// Convolves RGB with clamp-to-edge sampling. Throws EffectParamError when the
/// divisor is zero.
RasterImage convolve3x3(const RasterImage& image, const Kernel3x3& kernel);

/// Applies one effect and returns a new image. Only `border` changes the
/// dimensions and only `opacity` touches alpha.
RasterImage apply_effect(const RasterImage& image, const EffectSpec& spec);

/// Left fold of apply_effect over `chain`; the empty chain is the identity.
RasterImage apply_chain(const RasterImage& image,
                        std::span<const EffectSpec> chain);

/// Pixels processed by running `chain` on an image of `input` size: the sum
/// of each step's input area. This is the "effect pixels" term of the cost
/// model.
std::int64_t chain_work_pixels(Size input, std::span<const EffectSpec> chain);

/// Output size after the whole chain.
Size chain_output_size(Size input, std::span<const EffectSpec> chain);

/// ITU-R 601 luma with round-half-up, as used by grayscale, desaturate and
/// blackwhite.
inline std::uint8_t luma(std::uint8_t r, std::uint8_t g, std::uint8_t b) {
  return static_cast<std::uint8_t>((299 * r + 587 * g + 114 * b + 500) / 1000);
}

}  // namespace photocomp

#endif  // PHOTOCOMP_EFFECTS_H_
