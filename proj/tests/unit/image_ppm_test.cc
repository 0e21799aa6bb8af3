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

#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "photocomp/image.h"
#include "photocomp/ppm.h"

namespace photocomp {
namespace {

std::vector<std::uint8_t> bytes_of(const std::string& s) { return {s.begin(), s.end()}; }

RasterImage random_image(std::mt19937& rng, int max_side, bool opaque) {
  std::uniform_int_distribution<int> side(1, max_side), byte(0, 255);
  RasterImage img(side(rng), side(rng));
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      img.set(x, y, {static_cast<std::uint8_t>(byte(rng)), static_cast<std::uint8_t>(byte(rng)),
                     static_cast<std::uint8_t>(byte(rng)),
                     static_cast<std::uint8_t>(opaque ? 255 : byte(rng))});
    }
  }
  return img;
}

PpmErrorCode decode_error(const std::string& text) {
  try {
    decode_ppm(bytes_of(text));
  } catch (const PpmError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for input";
  return PpmErrorCode::kIo;
}

TEST(RasterImageTest, BufferMatchesDimensions) {
  RasterImage img(3, 2, Rgba{1, 2, 3, 4});
  EXPECT_EQ(img.pixels().size(), 3u * 2u * 4u);
  EXPECT_EQ(img.at(2, 1), (Rgba{1, 2, 3, 4}));
}

TEST(RasterImageTest, RejectsBadDimensions) {
  EXPECT_THROW(RasterImage(0, 5), ImageError);
  EXPECT_THROW(RasterImage(5, -1), ImageError);
  EXPECT_THROW(RasterImage(RasterImage::kMaxDimension + 1, 1), ImageError);
  EXPECT_THROW(RasterImage(2, 2, std::vector<std::uint8_t>(15)), ImageError);
}

TEST(RasterImageTest, CroppedCopiesSubRectangle) {
  RasterImage img(4, 4);
  for (int y = 0; y < 4; ++y)
    for (int x = 0; x < 4; ++x) img.set(x, y, {static_cast<std::uint8_t>(x), static_cast<std::uint8_t>(y), 0, 255});
  const RasterImage sub = img.cropped({1, 2, 2, 2});
  EXPECT_EQ(sub.width(), 2);
  EXPECT_EQ(sub.at(0, 0), (Rgba{1, 2, 0, 255}));
  EXPECT_EQ(sub.at(1, 1), (Rgba{2, 3, 0, 255}));
  EXPECT_THROW(img.cropped({3, 3, 2, 2}), ImageError);
}

TEST(PpmTest, DecodesTwoPixelFile) {
  std::string text = "P6\n2 1\n255\n";
  text += std::string{'\xff', '\x00', '\x00', '\x00', '\x00', '\xff'};
  const RasterImage img = decode_ppm(bytes_of(text));
  ASSERT_EQ(img.width(), 2);
  ASSERT_EQ(img.height(), 1);
  EXPECT_EQ(img.at(0, 0), (Rgba{255, 0, 0, 255}));
  EXPECT_EQ(img.at(1, 0), (Rgba{0, 0, 255, 255}));
}

TEST(PpmTest, HeaderCommentsAreSkipped) {
  std::string text = "P6 # comment\n# another\n1 1 # size\n255\n";
  text += std::string{'\x0a', '\x14', '\x1e'};
  EXPECT_EQ(decode_ppm(bytes_of(text)).at(0, 0), (Rgba{10, 20, 30, 255}));
}

TEST(PpmTest, DistinctErrors) {
  EXPECT_EQ(decode_error("P5\n1 1\n255\n\x01"), PpmErrorCode::kWrongMagic);
  EXPECT_EQ(decode_error("P6\n4 4\n255\n" + std::string(40, 'x')), PpmErrorCode::kTruncated);
  EXPECT_EQ(decode_error("P6\n1 1\n65535\n" + std::string(6, 'x')), PpmErrorCode::kUnsupportedMaxval);
  EXPECT_EQ(decode_error("P6\n1 1\n15\n" + std::string(3, 'x')), PpmErrorCode::kUnsupportedMaxval);
  EXPECT_EQ(decode_error("P6\nx 1\n255\n"), PpmErrorCode::kMalformedHeader);
  EXPECT_EQ(decode_error("P6\n0 1\n255\n"), PpmErrorCode::kMalformedHeader);
  EXPECT_EQ(decode_error("P6\n1 1"), PpmErrorCode::kMalformedHeader);
  EXPECT_EQ(decode_error(""), PpmErrorCode::kWrongMagic);
}

TEST(PpmTest, EncodePayloadIsRawRgb) {
  const std::vector<std::uint8_t> bytes = encode_ppm(RasterImage(1, 1, Rgba{10, 20, 30, 255}));
  ASSERT_GE(bytes.size(), 3u);
  EXPECT_EQ(std::vector<std::uint8_t>(bytes.end() - 3, bytes.end()), (std::vector<std::uint8_t>{10, 20, 30}));
}

TEST(PpmTest, AlphaIsDroppedOnSave) {
  const RasterImage img(1, 1, Rgba{10, 20, 30, 128});
  EXPECT_EQ(decode_ppm(encode_ppm(img)).at(0, 0), (Rgba{10, 20, 30, 255}));
}

TEST(PpmTest, RandomOpaqueImagesRoundTripThroughFiles) {
  std::mt19937 rng(11);
  const auto dir = std::filesystem::temp_directory_path() / "photocomp_ppm_test";
  std::filesystem::create_directories(dir);
  for (int i = 0; i < 50; ++i) {
    const RasterImage img = random_image(rng, 40, true);
    const auto path = dir / ("img" + std::to_string(i) + ".ppm");
    save_ppm(img, path);
    EXPECT_EQ(load_ppm(path), img);
  }
  std::filesystem::remove_all(dir);
}

TEST(PpmTest, AlphaPlaneRestoresTransparency) {
  std::mt19937 rng(5);
  for (int i = 0; i < 20; ++i) {
    const RasterImage img = random_image(rng, 20, false);
    RasterImage back = decode_ppm(encode_ppm(img));
    apply_alpha_pgm(encode_alpha_pgm(img), back);
    EXPECT_EQ(back, img);
  }
}

TEST(PpmTest, AlphaPlaneSizeMismatchIsRejected) {
  RasterImage a(2, 2), b(3, 2);
  EXPECT_THROW(apply_alpha_pgm(encode_alpha_pgm(a), b), PpmError);
}

TEST(PpmTest, MissingFileIsIoError) {
  try {
    load_ppm("/nonexistent/dir/x.ppm");
    FAIL();
  } catch (const PpmError& e) {
    EXPECT_EQ(e.code(), PpmErrorCode::kIo);
  }
}

}  // namespace
}  // namespace photocomp
