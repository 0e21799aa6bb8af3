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

#ifndef PHOTOCOMP_BACKEND_H_
#define PHOTOCOMP_BACKEND_H_

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "photocomp/capability.h"
#include "photocomp/cost.h"
#include "photocomp/failover.h"
#include "photocomp/image_store.h"
#include "photocomp/rasterizer.h"
#include "photocomp/scene.h"
#include "photocomp/viewport.h"

namespace photocomp {

struct BackendOptions {
  /// Source pixels; required when produce_pixels is set.
  const ImageStore* images = nullptr;
  /// Processing service client for effects the backend cannot run itself.
  FailoverClient* failover = nullptr;
  /// When false only CostReports are produced. Costs are identical either way.
  bool produce_pixels = true;
};

struct RenderResult {
  std::optional<Frame> frame;  // empty in cost-only mode
  CostReport cost;
};

class SessionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class RenderBackend;

/// A drag of one photo. The photo is drawn above every other photo until
/// end(); the scene passed to begin_interaction is updated in place.
class InteractionSession {
 public:
  InteractionSession(InteractionSession&& other) noexcept;
  InteractionSession& operator=(InteractionSession&&) = delete;
  ~InteractionSession();

  /// Moves the photo's center (standard coordinates) and renders a frame.
  RenderResult update(PointF new_center);
  /// Returns the photo to its z position and emits a full composite. Throws
  /// SessionError when called twice.
  RenderResult end();

  bool active() const { return active_; }
  const std::string& photo_id() const { return id_; }
  /// Frame and cost of beginning the session.
  const RenderResult& begin_result() const { return begin_; }

 private:
  friend class RenderBackend;
  InteractionSession(RenderBackend& backend, SceneDocument& scene, std::string id);

  RenderBackend* backend_;
  SceneDocument* scene_;
  std::string id_;
  bool active_ = true;
  RenderResult begin_;
};

/// Rendering strategy over the shared rasterizer. Backends differ only in
/// scheduling (what is redrawn when) and in their capability column; for the
/// same scene all of them produce identical pixels.
///
/// Cost accounting (work units are pixels written):
///   raster      every render clears the screen and redraws every photo,
///               re-running each photo's effect chain.
///   scenegraph, retained: photos are nodes with baked effects; an update
///   legacy      recomposites the old and new bounding boxes of the changed
///               photo and re-runs effects only when the chain changed.
class RenderBackend {
 public:
  virtual ~RenderBackend() = default;

  static std::unique_ptr<RenderBackend> create(BackendKind kind, ScreenSpec screen,
                                               BackendOptions options);

  BackendKind kind() const { return kind_; }
  const ScreenSpec& screen() const { return screen_; }
  bool produces_pixels() const { return options_.produce_pixels; }
  Capability capability_check(EffectKind effect) const {
    return photocomp::capability_check(kind_, effect);
  }

  /// Composites every photo back to front. Throws UnsupportedEffectError if a
  /// photo carries an effect this backend lacks and no failover is set.
  virtual RenderResult render_full(const SceneDocument& scene) = 0;

  /// Re-renders after photo `id` changed from `before` (nullptr when the
  /// photo was just added). Retained backends expect a prior render_full.
  virtual RenderResult render_update(const SceneDocument& scene, std::string_view id,
                                     const PhotoObject* before) = 0;

  /// Throws ZOrderError for an unknown id and SessionError if a session is
  /// already open on this backend.
  InteractionSession begin_interaction(SceneDocument& scene, std::string_view id);

  /// Effect pixels and remote calls needed to (re)bake `photo`.
  CostReport effect_cost(const PhotoObject& photo) const;
  /// Clipped screen bounding-box area of `photo`.
  std::int64_t draw_area(const PhotoObject& photo) const;

 protected:
  RenderBackend(BackendKind kind, ScreenSpec screen, BackendOptions options);

  /// Cropped source with the effect chain applied (routing unsupported
  /// effects through the failover client).
  RasterImage bake(const PhotoObject& photo) const;

  /// Clears `clip` to white and draws every photo intersecting it back to
  /// front; `top_id`, when set, is drawn last.
  void composite_region(Frame& frame, const SceneDocument& scene, const Rect& clip,
                        std::string_view top_id = {});

  /// Pixels for one photo; retained backends cache them.
  virtual std::shared_ptr<const RasterImage> pixels_for(const PhotoObject& photo) = 0;

  virtual RenderResult begin_session(SceneDocument& scene, const std::string& id) = 0;
  virtual RenderResult update_session(SceneDocument& scene, const std::string& id,
                                      const PhotoObject& before) = 0;
  virtual RenderResult end_session(SceneDocument& scene, const std::string& id) = 0;

  static CostReport one_frame() {
    CostReport c;
    c.ops = 1;
    c.frames = 1;
    return c;
  }

  BackendKind kind_;
  ScreenSpec screen_;
  BackendOptions options_;

 private:
  friend class InteractionSession;
  bool session_open_ = false;
};

/// Immediate mode with a static background layer and an interactive
/// foreground layer during drags.
class RasterBackend final : public RenderBackend {
 public:
  RasterBackend(ScreenSpec screen, BackendOptions options);

  RenderResult render_full(const SceneDocument& scene) override;
  RenderResult render_update(const SceneDocument& scene, std::string_view id,
                             const PhotoObject* before) override;

 protected:
  std::shared_ptr<const RasterImage> pixels_for(const PhotoObject& photo) override;
  RenderResult begin_session(SceneDocument& scene, const std::string& id) override;
  RenderResult update_session(SceneDocument& scene, const std::string& id,
                              const PhotoObject& before) override;
  RenderResult end_session(SceneDocument& scene, const std::string& id) override;

 private:
  CostReport full_cost(const SceneDocument& scene) const;

  std::optional<Frame> background_;
  std::optional<RasterImage> foreground_;
};

/// Retained mode; used for both the scenegraph and the legacy backend, which
/// differ only in their capability column.
class RetainedBackend final : public RenderBackend {
 public:
  RetainedBackend(BackendKind kind, ScreenSpec screen, BackendOptions options);

  RenderResult render_full(const SceneDocument& scene) override;
  RenderResult render_update(const SceneDocument& scene, std::string_view id,
                             const PhotoObject* before) override;

 protected:
  std::shared_ptr<const RasterImage> pixels_for(const PhotoObject& photo) override;
  RenderResult begin_session(SceneDocument& scene, const std::string& id) override;
  RenderResult update_session(SceneDocument& scene, const std::string& id,
                              const PhotoObject& before) override;
  RenderResult end_session(SceneDocument& scene, const std::string& id) override;

 private:
  struct Node {
    std::string source;
    std::optional<Rect> crop;
    EffectChain effects;
    std::shared_ptr<const RasterImage> baked;
  };

  RenderResult snapshot(CostReport cost) const;
  void recomposite(const SceneDocument& scene, const Rect& damage, std::string_view top_id = {});

  std::optional<Frame> frame_;
  std::map<std::string, Node, std::less<>> nodes_;
};

/// True when the baked pixels of `a` and `b` differ (source, crop or chain).
bool needs_rebake(const PhotoObject& a, const PhotoObject& b);

}  // namespace photocomp

#endif  // PHOTOCOMP_BACKEND_H_
