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

#include <memory>
#include <random>

#include <gtest/gtest.h>

#include "../support/scenes.h"
#include "photocomp/backend.h"
#include "photocomp/failover.h"

namespace photocomp {
namespace {

using testing_support::random_scene;

class BackendTest : public ::testing::Test {
 protected:
  BackendTest() : transport_(service_), client_(transport_) {
    store_.put("white100", RasterImage(100, 100, Rgba{10, 200, 30, 255}));
    store_.put("p100x80", RasterImage(100, 80, Rgba{250, 20, 90, 255}));
  }

  std::unique_ptr<RenderBackend> make(BackendKind kind, ScreenSpec screen = {}, bool failover = false,
                                      bool pixels = true) {
    BackendOptions o;
    o.images = &store_;
    o.failover = failover ? &client_ : nullptr;
    o.produce_pixels = pixels;
    return RenderBackend::create(kind, screen, o);
  }

  static PhotoObject photo(const std::string& id, const std::string& src, Size size, PointF center) {
    PhotoObject p;
    p.id = id;
    p.source = src;
    p.source_size = size;
    p.center = center;
    return p;
  }

  Frame fresh_render(const SceneDocument& scene, ScreenSpec screen = {}) {
    return *make(BackendKind::kRaster, screen, true)->render_full(scene).frame;
  }

  ImageStore store_;
  ProcessingService service_;
  LocalTransport transport_;
  FailoverClient client_;
};

TEST_F(BackendTest, CapabilityExamples) {
  EXPECT_EQ(capability_check(BackendKind::kLegacy, EffectKind::kSepia), Capability::kFallbackNeeded);
  EXPECT_EQ(capability_check(BackendKind::kRaster, EffectKind::kRedEye), Capability::kSupported);
  EXPECT_EQ(capability_check(BackendKind::kSceneGraph, EffectKind::kHue), Capability::kSupported);
  for (EffectKind k : kAllEffectKinds) EXPECT_TRUE(supports(BackendKind::kRaster, k));
  int sg = 0, legacy = 0;
  for (EffectKind k : kAllEffectKinds) {
    sg += !supports(BackendKind::kSceneGraph, k);
    legacy += !supports(BackendKind::kLegacy, k);
  }
  EXPECT_EQ(sg, 4);
  EXPECT_EQ(legacy, 5);
  EXPECT_EQ(backend_from_name("scenegraph"), BackendKind::kSceneGraph);
  EXPECT_FALSE(backend_from_name("svg"));
}

TEST_F(BackendTest, FullRenderCostExamples) {
  SceneDocument scene;
  const RenderResult empty = make(BackendKind::kRaster)->render_full(scene);
  EXPECT_EQ(empty.cost.work_units(), 786432);
  for (std::uint8_t v : empty.frame->rgb()) ASSERT_EQ(v, 255);

  scene.add(photo("a", "white100", {100, 100}, {200, 200}));
  scene.add(photo("b", "white100", {100, 100}, {600, 400}));
  EXPECT_EQ(make(BackendKind::kRaster)->render_full(scene).cost.work_units(), 786432 + 20000);
  EXPECT_EQ(make(BackendKind::kSceneGraph)->render_full(scene).cost.work_units(), 20000);
  EXPECT_EQ(make(BackendKind::kLegacy)->render_full(scene).cost.work_units(), 20000);
}

TEST_F(BackendTest, CostOnlyModeMatchesPixelMode) {
  std::mt19937 rng(3);
  for (int i = 0; i < 10; ++i) {
    const SceneDocument scene = random_scene(rng, store_, 6, {BackendKind::kRaster});
    for (BackendKind k : kAllBackends) {
      const RenderResult a = make(k, {}, true, true)->render_full(scene);
      const RenderResult b = make(k, {}, true, false)->render_full(scene);
      EXPECT_EQ(a.cost, b.cost);
      EXPECT_FALSE(b.frame.has_value());
    }
  }
}

TEST_F(BackendTest, CrossBackendFramesAreIdentical) {
  std::mt19937 rng(17);
  for (int i = 0; i < 15; ++i) {
    const SceneDocument scene =
        random_scene(rng, store_, 8, {BackendKind::kRaster, BackendKind::kSceneGraph});
    const ScreenSpec screen{400 + static_cast<int>(rng() % 300), 300 + static_cast<int>(rng() % 200)};
    const Frame raster = *make(BackendKind::kRaster, screen)->render_full(scene).frame;
    EXPECT_EQ(*make(BackendKind::kSceneGraph, screen)->render_full(scene).frame, raster);
    EXPECT_EQ(*make(BackendKind::kLegacy, screen, true)->render_full(scene).frame, raster);
  }
}

TEST_F(BackendTest, UnsupportedEffectNeedsFailover) {
  SceneDocument scene;
  PhotoObject p = photo("a", "white100", {100, 100}, {300, 300});
  p.effects = {fx::Sepia{}, fx::Invert{}};
  scene.add(p);
  EXPECT_THROW(make(BackendKind::kLegacy)->render_full(scene), UnsupportedEffectError);
  const RenderResult legacy = make(BackendKind::kLegacy, {}, true)->render_full(scene);
  EXPECT_EQ(legacy.cost.remote_calls, 1);
  EXPECT_EQ(*legacy.frame, fresh_render(scene));
  EXPECT_EQ(legacy.cost.effect_px, 20000);
}

TEST_F(BackendTest, RetainedUpdateEqualsFreshRender) {
  std::mt19937 rng(23);
  for (int i = 0; i < 10; ++i) {
    SceneDocument scene = random_scene(rng, store_, 6, {BackendKind::kSceneGraph});
    auto sg = make(BackendKind::kSceneGraph);
    sg->render_full(scene);
    for (int step = 0; step < 5; ++step) {
      const auto order = scene.draw_order();
      const PhotoObject before = *order[rng() % order.size()];
      PhotoObject after = before;
      switch (rng() % 3) {
        case 0: after.center = {after.center.x + 37, after.center.y - 11}; break;
        case 1: after.angle += 33; break;
        default: after.effects.push_back(fx::Invert{});
      }
      scene.replace(after);
      const RenderResult r = sg->render_update(scene, after.id, &before);
      ASSERT_EQ(*r.frame, fresh_render(scene));
    }
  }
}

TEST_F(BackendTest, RetainedUpdateCostSkipsEffectsUnlessChainChanges) {
  SceneDocument scene;
  PhotoObject p = photo("a", "p100x80", {100, 80}, {512, 384});
  p.effects = {fx::Invert{}};
  scene.add(p);
  auto sg = make(BackendKind::kSceneGraph);
  sg->render_full(scene);
  PhotoObject moved = transform_photo(p, action::Move{{515, 386}});
  scene.replace(moved);
  EXPECT_EQ(sg->render_update(scene, "a", &p).cost.work_units(), 16000);
  PhotoObject gray = moved;
  gray.effects.push_back(fx::Grayscale{});
  scene.replace(gray);
  EXPECT_EQ(sg->render_update(scene, "a", &moved).cost.work_units(), 16000 + 8000 + 8000);
}

TEST_F(BackendTest, InteractionCostExamples) {
  for (bool inverted : {false, true}) {
    SceneDocument scene;
    PhotoObject p = photo("a", "p100x80", {100, 80}, {512, 384});
    if (inverted) p.effects = {fx::Invert{}};
    scene.add(p);

    auto raster = make(BackendKind::kRaster);
    auto session = raster->begin_interaction(scene, "a");
    EXPECT_EQ(session.begin_result().cost, raster->render_full(scene).cost);
    const CostReport rc = session.update({515, 386}).cost;
    EXPECT_EQ(rc.work_units(), 16000 + (inverted ? 8000 : 0));
    session.end();

    auto sg = make(BackendKind::kSceneGraph);
    sg->render_full(scene);
    auto s2 = sg->begin_interaction(scene, "a");
    EXPECT_EQ(s2.update({518, 388}).cost.work_units(), 16000);
    s2.end();
  }
}

TEST_F(BackendTest, SessionFramesMatchFreshRenderForTopmostPhoto) {
  std::mt19937 rng(31);
  for (BackendKind kind : kAllBackends) {
    for (int i = 0; i < 4; ++i) {
      SceneDocument scene = random_scene(rng, store_, 6, {BackendKind::kRaster});
      const std::string top = scene.draw_order().back()->id;
      auto backend = make(kind, {640, 480}, true);
      backend->render_full(scene);
      auto session = backend->begin_interaction(scene, top);
      ASSERT_EQ(*session.begin_result().frame, fresh_render(scene, {640, 480}));
      for (int step = 0; step < 6; ++step) {
        const PointF c = scene.photo(top).center;
        const RenderResult r = session.update({c.x + 23.5, c.y - 9.25});
        ASSERT_EQ(*r.frame, fresh_render(scene, {640, 480})) << backend_name(kind);
      }
      const RenderResult end = session.end();
      ASSERT_EQ(*end.frame, fresh_render(scene, {640, 480}));
      EXPECT_FALSE(session.active());
    }
  }
}

TEST_F(BackendTest, EndAfterDragOfLowerPhotoEqualsFreshRender) {
  std::mt19937 rng(41);
  for (BackendKind kind : kAllBackends) {
    for (int i = 0; i < 4; ++i) {
      SceneDocument scene = random_scene(rng, store_, 6, {BackendKind::kRaster});
      const std::string id = scene.draw_order().front()->id;
      auto backend = make(kind, {640, 480}, true);
      backend->render_full(scene);
      auto session = backend->begin_interaction(scene, id);
      for (int step = 0; step < 4; ++step) {
        const PointF c = scene.photo(id).center;
        session.update({c.x + 40, c.y + 15});
      }
      EXPECT_EQ(*session.end().frame, fresh_render(scene, {640, 480})) << backend_name(kind);
    }
  }
}

TEST_F(BackendTest, SessionErrors) {
  SceneDocument scene;
  scene.add(photo("a", "p100x80", {100, 80}, {512, 384}));
  auto b = make(BackendKind::kRaster);
  EXPECT_THROW(b->begin_interaction(scene, "zz"), ZOrderError);
  {
    auto s = b->begin_interaction(scene, "a");
    EXPECT_THROW(b->begin_interaction(scene, "a"), SessionError);
    s.end();
    EXPECT_THROW(s.end(), SessionError);
    EXPECT_THROW(s.update({0, 0}), SessionError);
  }
  {
    auto s = b->begin_interaction(scene, "a");
  }
  EXPECT_NO_THROW(b->begin_interaction(scene, "a").end());
}

TEST_F(BackendTest, ContentDoesNotAffectCost) {
  store_.put("flat", RasterImage(100, 80, Rgba{1, 1, 1, 255}));
  for (BackendKind k : kAllBackends) {
    SceneDocument a, b;
    PhotoObject p = photo("a", "p100x80", {100, 80}, {300, 300});
    p.effects = {fx::Invert{}, fx::Blur{}};
    a.add(p);
    p.source = "flat";
    b.add(p);
    EXPECT_EQ(make(k, {}, true)->render_full(a).cost, make(k, {}, true)->render_full(b).cost);
  }
}

}  // namespace
}  // namespace photocomp
