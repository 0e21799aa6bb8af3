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

#ifndef PHOTOCOMP_SCENE_H_
#define PHOTOCOMP_SCENE_H_

#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "photocomp/geometry.h"
#include "photocomp/photo.h"
#include "photocomp/zorder.h"

namespace photocomp {

/// Ordered photo collection in the 1024x768 standard viewport. Photos keep
/// their insertion order; stacking is owned by the embedded ZOrderArray and
/// mirrored into every PhotoObject::z.
class SceneDocument {
 public:
  static constexpr Size kStandardViewport{1024, 768};

  explicit SceneDocument(int z_base = 0) : order_(z_base) {}

  /// Adds `photo` at the front of the stack; its z field is overwritten.
  /// Throws ZOrderError on a duplicate id.
  const PhotoObject& add(PhotoObject photo);

  /// Replaces the photo with the same id, keeping its z-index.
  void replace(PhotoObject photo);

  const PhotoObject* find(std::string_view id) const;
  /// Throws ZOrderError for an unknown id.
  const PhotoObject& photo(std::string_view id) const;

  void bring_to_front(std::string_view id);
  void send_to_back(std::string_view id);

  /// Photos from back to front.
  std::vector<const PhotoObject*> draw_order() const;

  std::span<const PhotoObject> photos() const { return photos_; }
  const ZOrderArray& zorder() const { return order_; }
  int z_base() const { return order_.z_base(); }
  std::size_t size() const { return photos_.size(); }
  bool empty() const { return photos_.empty(); }

  bool operator==(const SceneDocument&) const = default;

 private:
  std::size_t index_of(std::string_view id) const;
  void sync_z();

  std::vector<PhotoObject> photos_;
  ZOrderArray order_;
};

enum class SceneErrorCode {
  kMalformedJson,
  kUnknownField,
  kMissingField,
  kBadValue,
  kDuplicateId,
  kDuplicateZ,
  kNonContiguousZ,
  kUnresolvedSource,
};

class SceneError : public std::runtime_error {
 public:
  SceneError(SceneErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  SceneErrorCode code() const { return code_; }

 private:
  SceneErrorCode code_;
};

/// Maps a photo's `source` to the dimensions of that image. Source sizes are
/// not part of the document, so loading needs one of these.
using SourceSizeResolver = std::function<Size(std::string_view source)>;

std::string scene_save(const SceneDocument& scene);
SceneDocument scene_load(std::string_view text,
                         const SourceSizeResolver& resolve_size);

}  // namespace photocomp

#endif  // PHOTOCOMP_SCENE_H_
