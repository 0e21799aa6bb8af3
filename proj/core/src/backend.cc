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

#include "photocomp/backend.h"

#include <utility>

#include "photocomp/effects.h"

namespace photocomp {

std::string_view backend_name(BackendKind kind) {
  switch (kind) {
    case BackendKind::kRaster: return "raster";
    case BackendKind::kSceneGraph: return "scenegraph";
    case BackendKind::kLegacy: return "legacy";
  }
  return "unknown";
}

std::optional<BackendKind> backend_from_name(std::string_view name) {
  for (BackendKind k : kAllBackends) {
    if (backend_name(k) == name) return k;
  }
  return std::nullopt;
}

bool needs_rebake(const PhotoObject& a, const PhotoObject& b) {
  return a.source != b.source || a.crop != b.crop || a.effects != b.effects;
}

// --- InteractionSession ----------------------------------------------------

InteractionSession::InteractionSession(RenderBackend& backend, SceneDocument& scene, std::string id)
    : backend_(&backend), scene_(&scene), id_(std::move(id)) {}

InteractionSession::InteractionSession(InteractionSession&& other) noexcept
    : backend_(other.backend_),
      scene_(other.scene_),
      id_(std::move(other.id_)),
      active_(other.active_),
      begin_(std::move(other.begin_)) {
  other.active_ = false;
}

InteractionSession::~InteractionSession() {
  if (active_) backend_->session_open_ = false;
}

RenderResult InteractionSession::update(PointF new_center) {
  if (!active_) throw SessionError("interaction session already ended");
  const PhotoObject before = scene_->photo(id_);
  scene_->replace(transform_photo(before, action::Move{new_center}));
  return backend_->update_session(*scene_, id_, before);
}

RenderResult InteractionSession::end() {
  if (!active_) throw SessionError("interaction session already ended");
  active_ = false;
  backend_->session_open_ = false;
  return backend_->end_session(*scene_, id_);
}

// --- RenderBackend ---------------------------------------------------------

RenderBackend::RenderBackend(BackendKind kind, ScreenSpec screen, BackendOptions options)
    : kind_(kind), screen_(screen), options_(options) {
  if (screen_.width <= 0 || screen_.height <= 0) {
    throw std::invalid_argument("screen dimensions must be positive");
  }
  if (options_.produce_pixels && options_.images == nullptr) {
    throw std::invalid_argument("pixel rendering needs an image store");
  }
}

std::unique_ptr<RenderBackend> RenderBackend::create(BackendKind kind, ScreenSpec screen,
                                                     BackendOptions options) {
  if (kind == BackendKind::kRaster) return std::make_unique<RasterBackend>(screen, options);
  return std::make_unique<RetainedBackend>(kind, screen, options);
}

InteractionSession RenderBackend::begin_interaction(SceneDocument& scene, std::string_view id) {
  if (session_open_) throw SessionError("an interaction session is already open");
  const PhotoObject& photo = scene.photo(id);
  session_open_ = true;
  InteractionSession session(*this, scene, photo.id);
  session.begin_ = begin_session(scene, session.id_);
  return session;
}

CostReport RenderBackend::effect_cost(const PhotoObject& photo) const {
  CostReport c;
  const Rect crop = effective_crop(photo);
  c.effect_px = chain_work_pixels(Size{crop.w, crop.h}, photo.effects);
  for (const EffectSpec& spec : photo.effects) {
    if (supports(kind_, kind_of(spec))) continue;
    if (options_.failover == nullptr) {
      throw UnsupportedEffectError(std::string(effect_name(kind_of(spec))) +
                                   " reached the " + std::string(backend_name(kind_)) +
                                   " rasterizer without failover");
    }
    ++c.remote_calls;
  }
  return c;
}

std::int64_t RenderBackend::draw_area(const PhotoObject& photo) const {
  return screen_damage(photo, screen_).area();
}

RasterImage RenderBackend::bake(const PhotoObject& photo) const {
  const auto source = options_.images->get(photo.source);
  if (!source) throw std::runtime_error("missing source image '" + photo.source + "'");
  const Rect crop = effective_crop(photo);
  RasterImage current = crop == Rect{0, 0, source->width(), source->height()}
                            ? *source
                            : source->cropped(crop);
  for (const EffectSpec& spec : photo.effects) {
    current = route_effect(kind_, current, spec, options_.failover).image;
  }
  return current;
}

void RenderBackend::composite_region(Frame& frame, const SceneDocument& scene, const Rect& clip,
                                     std::string_view top_id) {
  const Rect area = intersect(clip, frame.bounds());
  if (area.empty()) return;
  frame.fill_white(area);
  const PhotoObject* top = nullptr;
  for (const PhotoObject* p : scene.draw_order()) {
    if (!top_id.empty() && p->id == top_id) {
      top = p;
      continue;
    }
    const Placement pl = place_photo(*p, screen_);
    if (intersect(pl.bbox, area).empty()) continue;
    composite_photo(frame, *pixels_for(*p), pl, area);
  }
  if (top != nullptr) composite_photo(frame, *pixels_for(*top), place_photo(*top, screen_), area);
}

// --- RasterBackend ---------------------------------------------------------

RasterBackend::RasterBackend(ScreenSpec screen, BackendOptions options)
    : RenderBackend(BackendKind::kRaster, screen, options) {}

std::shared_ptr<const RasterImage> RasterBackend::pixels_for(const PhotoObject& photo) {
  // Immediate mode keeps nothing between frames.
  return std::make_shared<const RasterImage>(bake(photo));
}

CostReport RasterBackend::full_cost(const SceneDocument& scene) const {
  CostReport c = one_frame();
  c.clear_px = screen_.area();
  for (const PhotoObject& p : scene.photos()) {
    c.draw_px += draw_area(p);
    c += effect_cost(p);
  }
  return c;
}

RenderResult RasterBackend::render_full(const SceneDocument& scene) {
  RenderResult result{std::nullopt, full_cost(scene)};
  if (options_.produce_pixels) {
    Frame frame(screen_);
    composite_region(frame, scene, frame.bounds());
    result.frame = std::move(frame);
  }
  return result;
}

RenderResult RasterBackend::render_update(const SceneDocument& scene, std::string_view,
                                          const PhotoObject*) {
  return render_full(scene);
}

RenderResult RasterBackend::begin_session(SceneDocument& scene, const std::string& id) {
  RenderResult result{std::nullopt, full_cost(scene)};
  if (!options_.produce_pixels) return result;

  // Background: every photo except the interactive one.
  SceneDocument static_part(scene.z_base());
  for (const PhotoObject* p : scene.draw_order()) {
    if (p->id != id) static_part.add(*p);
  }
  background_.emplace(screen_);
  composite_region(*background_, static_part, background_->bounds());

  const PhotoObject& photo = scene.photo(id);
  const Placement pl = place_photo(photo, screen_);
  foreground_.emplace(screen_.width, screen_.height, Rgba{0, 0, 0, 0});
  draw_to_layer(*foreground_, *pixels_for(photo), pl, screen_.bounds());

  Frame frame = *background_;
  composite_layer(frame, *foreground_, pl.bbox);
  result.frame = std::move(frame);
  return result;
}

RenderResult RasterBackend::update_session(SceneDocument& scene, const std::string& id,
                                           const PhotoObject& before) {
  const PhotoObject& after = scene.photo(id);
  RenderResult result{std::nullopt, one_frame()};
  // Clear the old footprint on the foreground layer, redraw at the new one.
  result.cost.draw_px = draw_area(before) + draw_area(after);
  result.cost += effect_cost(after);
  if (!options_.produce_pixels) return result;

  clear_layer(*foreground_, place_photo(before, screen_).bbox);
  const Placement pl = place_photo(after, screen_);
  draw_to_layer(*foreground_, *pixels_for(after), pl, screen_.bounds());
  Frame frame = *background_;
  composite_layer(frame, *foreground_, pl.bbox);
  result.frame = std::move(frame);
  return result;
}

RenderResult RasterBackend::end_session(SceneDocument& scene, const std::string&) {
  background_.reset();
  foreground_.reset();
  return render_full(scene);
}

// --- RetainedBackend -------------------------------------------------------

RetainedBackend::RetainedBackend(BackendKind kind, ScreenSpec screen, BackendOptions options)
    : RenderBackend(kind, screen, options) {
  if (kind == BackendKind::kRaster) {
    throw std::invalid_argument("retained backend cannot be of raster kind");
  }
}

std::shared_ptr<const RasterImage> RetainedBackend::pixels_for(const PhotoObject& photo) {
  auto it = nodes_.find(photo.id);
  if (it != nodes_.end() && it->second.source == photo.source && it->second.crop == photo.crop &&
      it->second.effects == photo.effects) {
    return it->second.baked;
  }
  Node node{photo.source, photo.crop, photo.effects,
            std::make_shared<const RasterImage>(bake(photo))};
  auto baked = node.baked;
  nodes_.insert_or_assign(photo.id, std::move(node));
  return baked;
}

RenderResult RetainedBackend::snapshot(CostReport cost) const {
  RenderResult result{std::nullopt, cost};
  if (options_.produce_pixels && frame_) result.frame = *frame_;
  return result;
}

void RetainedBackend::recomposite(const SceneDocument& scene, const Rect& damage,
                                  std::string_view top_id) {
  if (!options_.produce_pixels) return;
  if (!frame_) frame_.emplace(screen_);
  composite_region(*frame_, scene, damage, top_id);
}

RenderResult RetainedBackend::render_full(const SceneDocument& scene) {
  // Initial build of every node: no full-screen clear, only what is drawn.
  CostReport c = one_frame();
  for (const PhotoObject& p : scene.photos()) {
    c.draw_px += draw_area(p);
    c += effect_cost(p);
  }
  if (options_.produce_pixels) {
    frame_.emplace(screen_);
    composite_region(*frame_, scene, frame_->bounds());
  }
  return snapshot(c);
}

RenderResult RetainedBackend::render_update(const SceneDocument& scene, std::string_view id,
                                            const PhotoObject* before) {
  const PhotoObject& after = scene.photo(id);
  CostReport c = one_frame();
  c.draw_px = draw_area(after) + (before ? draw_area(*before) : 0);
  if (before == nullptr || needs_rebake(*before, after)) c += effect_cost(after);
  if (before) recomposite(scene, screen_damage(*before, screen_));
  recomposite(scene, screen_damage(after, screen_));
  return snapshot(c);
}

RenderResult RetainedBackend::begin_session(SceneDocument& scene, const std::string&) {
  if (options_.produce_pixels && !frame_) return render_full(scene);
  CostReport c;
  c.ops = 1;
  return snapshot(c);
}

RenderResult RetainedBackend::update_session(SceneDocument& scene, const std::string& id,
                                             const PhotoObject& before) {
  const PhotoObject& after = scene.photo(id);
  CostReport c = one_frame();
  c.draw_px = draw_area(before) + draw_area(after);
  recomposite(scene, screen_damage(before, screen_), id);
  recomposite(scene, screen_damage(after, screen_), id);
  return snapshot(c);
}

RenderResult RetainedBackend::end_session(SceneDocument& scene, const std::string& id) {
  const PhotoObject& photo = scene.photo(id);
  CostReport c = one_frame();
  c.draw_px = draw_area(photo);
  recomposite(scene, screen_damage(photo, screen_));
  return snapshot(c);
}

}  // namespace photocomp
