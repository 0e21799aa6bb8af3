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

#include "photocomp/image_store.h"

#include <fstream>
#include <iterator>
#include <stdexcept>
#include <utility>
#include <vector>

#include "photocomp/ppm.h"

namespace photocomp {

ImageStore::ImageStore(std::filesystem::path directory)
    : directory_(std::move(directory)) {
  std::filesystem::create_directories(*directory_);
}

bool ImageStore::valid_key(std::string_view key) {
  if (key.empty() || key.size() > 128 || key.front() == '.') return false;
  for (char c : key) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                    (c >= '0' && c <= '9') || c == '.' || c == '_' || c == '-';
    if (!ok) return false;
  }
  return true;
}

void ImageStore::put(const std::string& key, RasterImage image) {
  if (!valid_key(key)) throw std::invalid_argument("invalid image key '" + key + "'");
  auto shared = std::make_shared<const RasterImage>(std::move(image));
  std::lock_guard lock(mutex_);
  if (directory_) {
    save_ppm(*shared, *directory_ / (key + ".ppm"));
    const auto alpha_path = *directory_ / (key + ".alpha.pgm");
    if (!is_opaque(*shared)) {
      const auto bytes = encode_alpha_pgm(*shared);
      std::ofstream out(alpha_path, std::ios::binary | std::ios::trunc);
      out.write(reinterpret_cast<const char*>(bytes.data()),
                static_cast<std::streamsize>(bytes.size()));
    } else {
      std::error_code ignored;
      std::filesystem::remove(alpha_path, ignored);
    }
  }
  images_[key] = std::move(shared);
}

std::shared_ptr<const RasterImage> ImageStore::get(std::string_view key) const {
  std::lock_guard lock(mutex_);
  if (const auto it = images_.find(key); it != images_.end()) return it->second;
  if (!directory_ || !valid_key(key)) return nullptr;
  const std::string k(key);
  const auto path = *directory_ / (k + ".ppm");
  if (!std::filesystem::exists(path)) return nullptr;
  RasterImage image = load_ppm(path);
  const auto alpha_path = *directory_ / (k + ".alpha.pgm");
  if (std::filesystem::exists(alpha_path)) {
    std::ifstream in(alpha_path, std::ios::binary);
    const std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                          std::istreambuf_iterator<char>());
    apply_alpha_pgm(bytes, image);
  }
  auto shared = std::make_shared<const RasterImage>(std::move(image));
  images_.emplace(k, shared);
  return shared;
}

std::optional<Size> ImageStore::size_of(std::string_view key) const {
  const auto image = get(key);
  if (!image) return std::nullopt;
  return image->size();
}

}  // namespace photocomp
