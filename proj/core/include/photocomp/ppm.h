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

#ifndef PHOTOCOMP_PPM_H_
#define PHOTOCOMP_PPM_H_

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "photocomp/image.h"

namespace photocomp {

enum class PpmErrorCode {
  kWrongMagic,
  kMalformedHeader,
  kUnsupportedMaxval,
  kTruncated,
  kIo,
};

class PpmError : public std::runtime_error {
 public:
  PpmError(PpmErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  PpmErrorCode code() const { return code_; }

 private:
  PpmErrorCode code_;
};

// Binary PPM (P6, maxval 255). Decoded images are fully opaque; encoding
// drops alpha.
RasterImage decode_ppm(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> encode_ppm(const RasterImage& image);

RasterImage load_ppm(const std::filesystem::path& path);
void save_ppm(const RasterImage& image, const std::filesystem::path& path);

// Binary PGM (P5, maxval 255) carrying only an alpha plane. Used by the
// processing service so that non-opaque images survive the PPM wire format.
std::vector<std::uint8_t> encode_alpha_pgm(const RasterImage& image);
/// Overwrites the alpha channel of `image` with the plane in `bytes`.
void apply_alpha_pgm(std::span<const std::uint8_t> bytes, RasterImage& image);

bool is_opaque(const RasterImage& image);

}  // namespace photocomp

#endif  // PHOTOCOMP_PPM_H_
