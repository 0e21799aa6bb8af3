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

#include "photocomp/scene.h"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include <nlohmann/json.hpp>

#include "effect_json.h"

namespace photocomp {

// --- SceneDocument ---------------------------------------------------------

const PhotoObject& SceneDocument::add(PhotoObject photo) {
  order_.insert(photo.id);
  photo.z = order_.z_of(photo.id);
  photos_.push_back(std::move(photo));
  return photos_.back();
}

void SceneDocument::replace(PhotoObject photo) {
  const std::size_t i = index_of(photo.id);
  photo.z = photos_[i].z;
  photos_[i] = std::move(photo);
}

const PhotoObject* SceneDocument::find(std::string_view id) const {
  const auto it = std::find_if(photos_.begin(), photos_.end(),
                               [&](const PhotoObject& p) { return p.id == id; });
  return it == photos_.end() ? nullptr : &*it;
}

const PhotoObject& SceneDocument::photo(std::string_view id) const {
  return photos_[index_of(id)];
}

void SceneDocument::bring_to_front(std::string_view id) {
  order_.bring_to_front(id);
  sync_z();
}

void SceneDocument::send_to_back(std::string_view id) {
  order_.send_to_back(id);
  sync_z();
}

std::vector<const PhotoObject*> SceneDocument::draw_order() const {
  std::vector<const PhotoObject*> out;
  out.reserve(photos_.size());
  for (const std::string& id : order_.draw_order()) out.push_back(find(id));
  return out;
}

std::size_t SceneDocument::index_of(std::string_view id) const {
  const PhotoObject* p = find(id);
  if (p == nullptr) throw ZOrderError("unknown photo id '" + std::string(id) + "'");
  return static_cast<std::size_t>(p - photos_.data());
}

void SceneDocument::sync_z() {
  for (PhotoObject& p : photos_) p.z = order_.z_of(p.id);
}

// --- JSON ------------------------------------------------------------------

namespace {

using nlohmann::json;

[[noreturn]] void fail(SceneErrorCode code, const std::string& message) {
  throw SceneError(code, message);
}

void reject_unknown_fields(const json& obj, const std::set<std::string>& allowed,
                           const char* where) {
  for (const auto& [k, v] : obj.items()) {
    if (!allowed.contains(k)) {
      fail(SceneErrorCode::kUnknownField, std::string("unknown field '") + k + "' in " + where);
    }
  }
}

const json& require(const json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) fail(SceneErrorCode::kMissingField, std::string("missing field '") + key + "'");
  return *it;
}

double number(const json& v, const char* what) {
  if (!v.is_number()) fail(SceneErrorCode::kBadValue, std::string(what) + " must be a number");
  return v.get<double>();
}

int integer(const json& v, const char* what) {
  if (!v.is_number_integer()) fail(SceneErrorCode::kBadValue, std::string(what) + " must be an integer");
  return v.get<int>();
}

PhotoObject photo_from_json(const json& obj, const SourceSizeResolver& resolve_size) {
  if (!obj.is_object()) fail(SceneErrorCode::kBadValue, "photo must be an object");
  reject_unknown_fields(obj, {"id", "source", "crop", "scale", "angle", "center", "effects", "z"},
                        "photo");
  PhotoObject p;
  const json& id = require(obj, "id");
  const json& source = require(obj, "source");
  if (!id.is_string() || !source.is_string()) {
    fail(SceneErrorCode::kBadValue, "photo id and source must be strings");
  }
  p.id = id.get<std::string>();
  p.source = source.get<std::string>();

  const json& crop = require(obj, "crop");
  if (!crop.is_null()) {
    if (!crop.is_array() || crop.size() != 4) {
      fail(SceneErrorCode::kBadValue, "crop must be null or [x,y,w,h]");
    }
    p.crop = Rect{integer(crop[0], "crop.x"), integer(crop[1], "crop.y"),
                  integer(crop[2], "crop.w"), integer(crop[3], "crop.h")};
  }
  p.scale = number(require(obj, "scale"), "scale");
  if (!(p.scale > 0)) fail(SceneErrorCode::kBadValue, "scale must be positive");
  p.angle = number(require(obj, "angle"), "angle");

  const json& center = require(obj, "center");
  if (!center.is_array() || center.size() != 2) fail(SceneErrorCode::kBadValue, "center must be [x,y]");
  p.center = PointF{number(center[0], "center.x"), number(center[1], "center.y")};

  const json& effects = require(obj, "effects");
  if (!effects.is_array()) fail(SceneErrorCode::kBadValue, "effects must be an array");
  for (const json& e : effects) {
    try {
      p.effects.push_back(detail::effect_from_json(e));
    } catch (const detail::EffectJsonError& err) {
      fail(err.fault() == detail::EffectJsonFault::kUnknownField ? SceneErrorCode::kUnknownField
                                                                 : SceneErrorCode::kBadValue,
           err.what());
    }
  }
  p.z = integer(require(obj, "z"), "z");

  try {
    p.source_size = resolve_size(p.source);
  } catch (const std::exception& e) {
    fail(SceneErrorCode::kUnresolvedSource, "cannot resolve source '" + p.source + "': " + e.what());
  }
  if (p.source_size.width <= 0 || p.source_size.height <= 0) {
    fail(SceneErrorCode::kUnresolvedSource, "source '" + p.source + "' has no size");
  }
  if (p.crop) {
    const Rect bounds{0, 0, p.source_size.width, p.source_size.height};
    if (p.crop->empty() || intersect(*p.crop, bounds) != *p.crop) {
      fail(SceneErrorCode::kBadValue, "crop of '" + p.id + "' is outside its source");
    }
  }
  return p;
}

}  // namespace

std::string scene_save(const SceneDocument& scene) {
  json photos = json::array();
  for (const PhotoObject& p : scene.photos()) {
    json effects = json::array();
    for (const EffectSpec& e : p.effects) effects.push_back(detail::effect_to_json(e));
    json crop = nullptr;
    if (p.crop) crop = {p.crop->x, p.crop->y, p.crop->w, p.crop->h};
    photos.push_back({
        {"id", p.id},
        {"source", p.source},
        {"crop", crop},
        {"scale", p.scale},
        {"angle", p.angle},
        {"center", {p.center.x, p.center.y}},
        {"effects", effects},
        {"z", p.z},
    });
  }
  const json doc = {
      {"standard_viewport",
       {SceneDocument::kStandardViewport.width, SceneDocument::kStandardViewport.height}},
      {"z_base", scene.z_base()},
      {"photos", photos},
  };
  return doc.dump(2) + "\n";
}

SceneDocument scene_load(std::string_view text, const SourceSizeResolver& resolve_size) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(SceneErrorCode::kMalformedJson, e.what());
  }
  if (!doc.is_object()) fail(SceneErrorCode::kMalformedJson, "document must be a JSON object");
  reject_unknown_fields(doc, {"standard_viewport", "z_base", "photos"}, "document");

  const json& viewport = require(doc, "standard_viewport");
  if (viewport != json{SceneDocument::kStandardViewport.width,
                       SceneDocument::kStandardViewport.height}) {
    fail(SceneErrorCode::kBadValue, "standard_viewport must be [1024,768]");
  }
  const int z_base = integer(require(doc, "z_base"), "z_base");
  const json& photos = require(doc, "photos");
  if (!photos.is_array()) fail(SceneErrorCode::kBadValue, "photos must be an array");

  std::vector<PhotoObject> parsed;
  std::set<std::string> ids;
  std::map<int, std::string> by_z;
  for (const json& obj : photos) {
    PhotoObject p = photo_from_json(obj, resolve_size);
    if (!ids.insert(p.id).second) fail(SceneErrorCode::kDuplicateId, "duplicate photo id '" + p.id + "'");
    if (!by_z.emplace(p.z, p.id).second) {
      fail(SceneErrorCode::kDuplicateZ, "duplicate z-index " + std::to_string(p.z));
    }
    parsed.push_back(std::move(p));
  }
  int expected = z_base;
  for (const auto& [z, id] : by_z) {
    if (z != expected++) {
      fail(SceneErrorCode::kNonContiguousZ,
           "z-indexes must be contiguous from z_base " + std::to_string(z_base));
    }
  }

  // Keep the document's photo order; bringing each id to the front in
  // ascending z leaves the stack sorted by z.
  SceneDocument scene(z_base);
  for (const PhotoObject& p : parsed) scene.add(p);
  for (const auto& [z, id] : by_z) scene.bring_to_front(id);
  return scene;
}

}  // namespace photocomp
