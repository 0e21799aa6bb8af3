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

#ifndef PHOTOCOMP_IMAGE_STORE_H_
#define PHOTOCOMP_IMAGE_STORE_H_

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>

#include "photocomp/image.h"

namespace photocomp {

/// Keyed, thread-safe image storage shared by the renderers and the
/// processing service. With a directory, images are persisted as
/// <key>.ppm plus <key>.alpha.pgm when they are not opaque.
class ImageStore {
 public:
  ImageStore() = default;
  explicit ImageStore(std::filesystem::path directory);

  ImageStore(const ImageStore&) = delete;
  ImageStore& operator=(const ImageStore&) = delete;

  /// Keys are 1-128 chars of [A-Za-z0-9._-] and may not start with '.'.
  static bool valid_key(std::string_view key);

  /// Throws std::invalid_argument on an invalid key.
  void put(const std::string& key, RasterImage image);
  std::shared_ptr<const RasterImage> get(std::string_view key) const;
  std::optional<Size> size_of(std::string_view key) const;
  bool contains(std::string_view key) const { return get(key) != nullptr; }

 private:
  std::optional<std::filesystem::path> directory_;
  mutable std::mutex mutex_;
  mutable std::map<std::string, std::shared_ptr<const RasterImage>, std::less<>> images_;
};

}  // namespace photocomp

#endif  // PHOTOCOMP_IMAGE_STORE_H_
