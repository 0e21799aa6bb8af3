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

#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "../support/oracles.h"
#include "photocomp/effects.h"

namespace photocomp {
namespace {

RasterImage pixel(Rgba c) { return RasterImage(1, 1, c); }

Rgba one(const EffectSpec& spec, Rgba c) { return apply_effect(pixel(c), spec).at(0, 0); }

RasterImage random_image(std::mt19937& rng, int max_side) {
  std::uniform_int_distribution<int> side(1, max_side), byte(0, 255);
  RasterImage img(side(rng), side(rng));
  for (auto& v : img.pixels()) v = static_cast<std::uint8_t>(byte(rng));
  return img;
}

TEST(EffectsTest, InvertExample) {
  EXPECT_EQ(one(fx::Invert{}, {10, 20, 30, 255}), (Rgba{245, 235, 225, 255}));
}

TEST(EffectsTest, GrayscaleMatchesLumaOracle) {
  const int y = oracle::luma(255, 0, 0);
  EXPECT_EQ(y, 76);
  const auto u = static_cast<std::uint8_t>(y);
  EXPECT_EQ(one(fx::Grayscale{}, {255, 0, 0, 255}), (Rgba{u, u, u, 255}));
}

TEST(EffectsTest, SepiaMatchesMatrixOracle) {
  const auto o = oracle::sepia(100, 100, 100);
  EXPECT_EQ(o, (std::array<int, 3>{135, 120, 94}));
  EXPECT_EQ(one(fx::Sepia{}, {100, 100, 100, 255}), (Rgba{135, 120, 94, 255}));
}

TEST(EffectsTest, HueHalfTurnMatchesHslOracle) {
  const auto o = oracle::hue_rotate(255, 0, 0, 180);
  EXPECT_EQ(o, (std::array<int, 3>{0, 255, 255}));
  EXPECT_EQ(one(fx::Hue{180}, {255, 0, 0, 255}), (Rgba{0, 255, 255, 255}));
}

TEST(EffectsTest, PerPixelFormulasAgreeWithOraclesOnRandomColors) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> byte(0, 255);
  std::uniform_real_distribution<double> deg(-720, 720);
  for (int i = 0; i < 2000; ++i) {
    const int r = byte(rng), g = byte(rng), b = byte(rng);
    const Rgba c{static_cast<std::uint8_t>(r), static_cast<std::uint8_t>(g), static_cast<std::uint8_t>(b), 255};
    const auto s = oracle::sepia(r, g, b);
    EXPECT_EQ(one(fx::Sepia{}, c), (Rgba{static_cast<std::uint8_t>(s[0]), static_cast<std::uint8_t>(s[1]),
                                         static_cast<std::uint8_t>(s[2]), 255}));
    const double d = deg(rng);
    const auto h = oracle::hue_rotate(r, g, b, d);
    const Rgba got = one(fx::Hue{d}, c);
    EXPECT_NEAR(got.r, h[0], 1);
    EXPECT_NEAR(got.g, h[1], 1);
    EXPECT_NEAR(got.b, h[2], 1);
  }
}

TEST(EffectsTest, BlackWhiteThresholdExtremes) {
  EXPECT_EQ(one(fx::BlackWhite{128}, {255, 255, 255, 255}), (Rgba{255, 255, 255, 255}));
  EXPECT_EQ(one(fx::BlackWhite{128}, {0, 0, 0, 255}), (Rgba{0, 0, 0, 255}));
  EXPECT_EQ(one(fx::BlackWhite{76}, {255, 0, 0, 255}), (Rgba{255, 255, 255, 255}));
  EXPECT_EQ(one(fx::BlackWhite{77}, {255, 0, 0, 255}), (Rgba{0, 0, 0, 255}));
}

TEST(EffectsTest, BrightnessContrastOpacity) {
  EXPECT_EQ(one(fx::Brightness{100}, {200, 10, 0, 7}), (Rgba{255, 110, 100, 7}));
  EXPECT_EQ(one(fx::Brightness{-50}, {20, 60, 255, 255}), (Rgba{0, 10, 205, 255}));
  EXPECT_EQ(one(fx::Contrast{2.0}, {100, 128, 200, 255}), (Rgba{72, 128, 255, 255}));
  EXPECT_EQ(one(fx::Contrast{0.0}, {3, 250, 90, 255}), (Rgba{128, 128, 128, 255}));
  EXPECT_EQ(one(fx::Opacity{0.5}, {1, 2, 3, 255}), (Rgba{1, 2, 3, 128}));
  EXPECT_EQ(one(fx::Opacity{0.0}, {1, 2, 3, 255}), (Rgba{1, 2, 3, 0}));
}

TEST(EffectsTest, SaturateZeroIsHslGray) {
  const Rgba g = one(fx::Saturate{0.0}, {200, 100, 0, 255});
  EXPECT_EQ(g.r, g.g);
  EXPECT_EQ(g.g, g.b);
  EXPECT_EQ(g.r, 100);  // HSL lightness (200 + 0) / 2
}

TEST(EffectsTest, FlipsMirror) {
  RasterImage img(3, 2);
  for (int y = 0; y < 2; ++y)
    for (int x = 0; x < 3; ++x) img.set(x, y, {static_cast<std::uint8_t>(x), static_cast<std::uint8_t>(y), 0, 255});
  const RasterImage h = apply_effect(img, fx::FlipH{});
  const RasterImage v = apply_effect(img, fx::FlipV{});
  EXPECT_EQ(h.at(0, 1), img.at(2, 1));
  EXPECT_EQ(v.at(2, 0), img.at(2, 1));
}

TEST(EffectsTest, BorderAddsWidthOnEachSide) {
  const RasterImage img(4, 3, Rgba{9, 9, 9, 255});
  const RasterImage out = apply_effect(img, fx::Border{2, Rgba{255, 0, 0, 255}});
  EXPECT_EQ(out.width(), 8);
  EXPECT_EQ(out.height(), 7);
  EXPECT_EQ(out.at(0, 0), (Rgba{255, 0, 0, 255}));
  EXPECT_EQ(out.at(7, 6), (Rgba{255, 0, 0, 255}));
  EXPECT_EQ(out.at(2, 2), (Rgba{9, 9, 9, 255}));
  EXPECT_EQ(out.cropped({2, 2, 4, 3}), img);
  EXPECT_EQ(effect_output_size(fx::Border{2, {}}, {4, 3}), (Size{8, 7}));
}

TEST(EffectsTest, RedEyeOnlyInsideRegionAndOnlyRed) {
  RasterImage img(2, 1, Rgba{200, 60, 40, 255});
  const RasterImage out = apply_effect(img, fx::RedEye{{0, 0, 1, 1}});
  EXPECT_EQ(out.at(0, 0), (Rgba{50, 60, 40, 255}));
  EXPECT_EQ(out.at(1, 0), img.at(1, 0));
  // 2R > 3 max(G,B) fails at exactly 1.5x.
  EXPECT_EQ(one(fx::RedEye{{0, 0, 1, 1}}, {150, 100, 0, 255}), (Rgba{150, 100, 0, 255}));
  EXPECT_EQ(one(fx::RedEye{{0, 0, 1, 1}}, {151, 100, 1, 255}), (Rgba{51, 100, 1, 255}));
}

TEST(KernelTest, IdentityIsNoOp) {
  std::mt19937 rng(1);
  const RasterImage img = random_image(rng, 20);
  EXPECT_EQ(convolve3x3(img, Kernel3x3::identity()), img);
}

TEST(KernelTest, ConstantImageIsFixedForBlurAndSharpen) {
  const RasterImage img(7, 5, Rgba{33, 150, 240, 90});
  EXPECT_EQ(convolve3x3(img, Kernel3x3::box_blur()), img);
  EXPECT_EQ(convolve3x3(img, Kernel3x3::sharpen()), img);
  // Emboss weights sum to 1: constant c maps to clamp(c + 128).
  EXPECT_EQ(convolve3x3(img, Kernel3x3::emboss()).at(3, 3), (Rgba{161, 255, 255, 90}));
}

TEST(KernelTest, ClampToEdgeAndDirectEvaluation) {
  RasterImage img(3, 1, Rgba{0, 0, 0, 255});
  img.set(1, 0, {90, 0, 0, 255});
  const RasterImage out = convolve3x3(img, Kernel3x3::box_blur());
  // Left pixel: column -1 clamps to column 0, so 3 rows x (0 + 0 + 90) / 9.
  EXPECT_EQ(out.at(0, 0).r, 30);
  EXPECT_EQ(out.at(1, 0).r, 30);
  const RasterImage sharp = convolve3x3(img, Kernel3x3::sharpen());
  EXPECT_EQ(sharp.at(1, 0).r, 255);  // 5*90 - 0 clamps
  EXPECT_EQ(sharp.at(0, 0).r, 0);    // -90 clamps
}

TEST(KernelTest, ZeroDivisorThrows) {
  Kernel3x3 k = Kernel3x3::identity();
  k.divisor = 0;
  EXPECT_THROW(convolve3x3(RasterImage(2, 2), k), EffectParamError);
}

TEST(ChainTest, EmptyChainAndInvolutions) {
  std::mt19937 rng(2);
  const RasterImage img = random_image(rng, 16);
  EXPECT_EQ(apply_chain(img, {}), img);
  const std::vector<EffectSpec> twice{fx::Invert{}, fx::Invert{}};
  EXPECT_EQ(apply_chain(img, twice), img);
  const std::vector<EffectSpec> gg{fx::Grayscale{}, fx::Grayscale{}};
  EXPECT_EQ(apply_chain(img, gg), apply_effect(img, fx::Grayscale{}));
}

TEST(ChainTest, WorkPixelsSumsStepInputs) {
  const std::vector<EffectSpec> chain{fx::Invert{}, fx::Border{1, {}}, fx::Grayscale{}};
  EXPECT_EQ(chain_work_pixels({10, 10}, chain), 100 + 100 + 144);
  EXPECT_EQ(chain_output_size({10, 10}, chain), (Size{12, 12}));
  EXPECT_EQ(chain_work_pixels({10, 10}, {}), 0);
}

class EffectPropertyTest : public ::testing::TestWithParam<int> {};

TEST_P(EffectPropertyTest, AlgebraOnRandomImages) {
  std::mt19937 rng(GetParam());
  for (int i = 0; i < 20; ++i) {
    const RasterImage img = random_image(rng, 64);
    for (const EffectSpec& inv : {EffectSpec{fx::Invert{}}, EffectSpec{fx::FlipH{}}, EffectSpec{fx::FlipV{}}}) {
      EXPECT_EQ(apply_effect(apply_effect(img, inv), inv), img);
    }
    for (const EffectSpec& idem : {EffectSpec{fx::Grayscale{}}, EffectSpec{fx::Desaturate{}}}) {
      const RasterImage once = apply_effect(img, idem);
      EXPECT_EQ(apply_effect(once, idem), once);
    }
    for (const EffectSpec& id : {EffectSpec{fx::Brightness{0}}, EffectSpec{fx::Contrast{1.0}},
                                 EffectSpec{fx::Hue{0.0}}, EffectSpec{fx::Saturate{1.0}},
                                 EffectSpec{fx::Opacity{1.0}}}) {
      EXPECT_EQ(apply_effect(img, id), img) << effect_name(kind_of(id));
    }
    for (EffectKind kind : kAllEffectKinds) {
      const EffectSpec spec = default_effect(kind);
      const RasterImage out = apply_effect(img, spec);
      EXPECT_EQ(out.size(), effect_output_size(spec, img.size()));
      EXPECT_EQ(out, apply_effect(img, spec));
      if (kind != EffectKind::kOpacity && kind != EffectKind::kBorder && kind != EffectKind::kFlipH &&
          kind != EffectKind::kFlipV) {
        for (std::size_t p = 3; p < out.pixels().size(); p += 4) {
          ASSERT_EQ(out.pixels()[p], img.pixels()[p]) << effect_name(kind);
        }
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, EffectPropertyTest, ::testing::Range(1, 6));

TEST(EffectSpecTest, NamesRoundTripAndValidation) {
  for (EffectKind k : kAllEffectKinds) EXPECT_EQ(effect_kind_from_name(effect_name(k)), k);
  EXPECT_FALSE(effect_kind_from_name("sparkle").has_value());
  EXPECT_THROW(validate(fx::Brightness{256}), EffectParamError);
  EXPECT_THROW(validate(fx::Contrast{-0.1}), EffectParamError);
  EXPECT_THROW(validate(fx::Opacity{1.5}), EffectParamError);
  EXPECT_THROW(validate(fx::BlackWhite{300}), EffectParamError);
  EXPECT_THROW(validate(fx::Border{-1, {}}), EffectParamError);
  EXPECT_THROW(validate(fx::RedEye{{0, 0, 0, 4}}), EffectParamError);
  EXPECT_THROW(apply_effect(RasterImage(1, 1), fx::Saturate{-1}), EffectParamError);
}

TEST(EffectSpecTest, FromTextParams) {
  EXPECT_EQ(effect_from_params("brightness", {{"delta", "40"}}), EffectSpec(fx::Brightness{40}));
  EXPECT_EQ(effect_from_params("border", {{"width", "3"}, {"color", "1,2,3,4"}}),
            EffectSpec(fx::Border{3, Rgba{1, 2, 3, 4}}));
  EXPECT_EQ(effect_from_params("redeye", {{"region", "1,2,3,4"}}), EffectSpec(fx::RedEye{{1, 2, 3, 4}}));
  EXPECT_EQ(effect_from_params("invert", {}), EffectSpec(fx::Invert{}));
  EXPECT_THROW(effect_from_params("sparkle", {}), EffectParamError);
  EXPECT_THROW(effect_from_params("hue", {{"degrees", "abc"}}), EffectParamError);
  EXPECT_THROW(effect_from_params("hue", {{"speed", "3"}}), EffectParamError);
  EXPECT_THROW(effect_from_params("opacity", {{"alpha", "2"}}), EffectParamError);
}

}  // namespace
}  // namespace photocomp
