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
#include <thread>

#include <gtest/gtest.h>

#include "../support/scenes.h"
#include "photocomp/effects.h"
#include "photocomp/failover.h"
#include "photocomp/ppm.h"

namespace photocomp {
namespace {

using nlohmann::json;
using testing_support::noise_image;
using testing_support::sample_effect;

json one_pixel_request(const std::string& effect) {
  json req = {{"op", "apply_effect"}, {"args", {{"effect", effect}}}};
  attach_image(req, RasterImage(1, 1, Rgba{10, 20, 30, 255}));
  return req;
}

int code_of(const json& response) {
  EXPECT_EQ(response["status"], "error");
  EXPECT_TRUE(response["payload"].is_null());
  EXPECT_FALSE(response["message"].get<std::string>().empty());
  return response["error_code"].get<int>();
}

TEST(ServiceTest, Ping) {
  const json r = ProcessingService().dispatch({{"op", "ping"}});
  EXPECT_EQ(r["status"], "ok");
  EXPECT_TRUE(r["error_code"].is_null());
}

TEST(ServiceTest, ApplyInvertOnOnePixel) {
  ProcessingService service;
  LocalTransport transport(service);
  FailoverClient client(transport);
  const RasterImage out = client.apply_effect(RasterImage(1, 1, Rgba{10, 20, 30, 255}), fx::Invert{});
  EXPECT_EQ(out.at(0, 0), (Rgba{245, 235, 225, 255}));
  EXPECT_EQ(client.calls(), 1);

  const json r = service.dispatch(one_pixel_request("invert"));
  ASSERT_EQ(r["status"], "ok");
  EXPECT_EQ(r["payload"]["width"], 1);
}

TEST(ServiceTest, ErrorCodes) {
  const ProcessingService service;
  EXPECT_EQ(code_of(service.dispatch({{"op", "launch_missiles"}})), 4001);
  EXPECT_EQ(code_of(service.dispatch({{"op", "apply_effect"}, {"args", 5}})), 4002);
  EXPECT_EQ(code_of(service.dispatch(json::array())), 4002);
  EXPECT_EQ(code_of(json::parse(service.handle("{not json"))), 4002);
  json bad_param = one_pixel_request("brightness");
  bad_param["args"]["delta"] = "lots";
  EXPECT_EQ(code_of(service.dispatch(bad_param)), 4002);
  EXPECT_EQ(code_of(service.dispatch(one_pixel_request("sparkle"))), 4003);
  json garbage = one_pixel_request("invert");
  garbage["image"] = "!!!not base64!!!";
  EXPECT_EQ(code_of(service.dispatch(garbage)), 4004);
  json not_ppm = one_pixel_request("invert");
  not_ppm["image"] = "UDUKMSAxCjI1NQoA";  // a P5 file
  EXPECT_EQ(code_of(service.dispatch(not_ppm)), 4004);
  json missing_key = one_pixel_request("invert");
  missing_key["image"] = {{"key", "nothing"}};
  EXPECT_EQ(code_of(service.dispatch(missing_key)), 4004);
  json huge = one_pixel_request("border");
  huge["args"]["width"] = 100000;
  huge["args"]["color"] = {0, 0, 0, 255};
  EXPECT_EQ(code_of(service.dispatch(huge)), 5001);
}

TEST(ServiceTest, IdenticalRequestsGiveIdenticalResponses) {
  const ProcessingService service;
  const json req = one_pixel_request("sepia");
  EXPECT_EQ(service.dispatch(req), service.dispatch(req));
}

TEST(ServiceTest, KeyedImages) {
  auto store = std::make_shared<ImageStore>();
  const ProcessingService service(store);
  json put = {{"op", "put_image"}, {"args", {{"key", "k1"}}}};
  attach_image(put, RasterImage(2, 2, Rgba{1, 2, 3, 255}));
  ASSERT_EQ(service.dispatch(put)["status"], "ok");
  json req = {{"op", "apply_effect"}, {"args", {{"effect", "invert"}}}, {"image", {{"key", "k1"}}}};
  const json r = service.dispatch(req);
  ASSERT_EQ(r["status"], "ok");
  EXPECT_EQ(r["payload"]["height"], 2);
  json bad_key = put;
  bad_key["args"]["key"] = "../etc";
  EXPECT_EQ(code_of(service.dispatch(bad_key)), 4002);
}

TEST(RouteTest, ExamplesAndTransparency) {
  ProcessingService service;
  LocalTransport transport(service);
  FailoverClient client(transport);
  std::mt19937 rng(9);
  const RasterImage img = noise_image(rng, 17, 13, true);
  EXPECT_EQ(route_effect(BackendKind::kRaster, img, fx::Sepia{}, &client).route, Route::kLocal);
  EXPECT_EQ(route_effect(BackendKind::kLegacy, img, fx::Invert{}, &client).route, Route::kLocal);
  const RoutedImage remote = route_effect(BackendKind::kLegacy, img, fx::Sepia{}, &client);
  EXPECT_EQ(remote.route, Route::kRemote);
  EXPECT_EQ(remote.image, apply_effect(img, fx::Sepia{}));
  EXPECT_THROW(route_effect(BackendKind::kLegacy, img, fx::Sepia{}, nullptr), UnsupportedEffectError);

  for (BackendKind b : kAllBackends) {
    for (EffectKind k : kAllEffectKinds) {
      const EffectSpec spec = sample_effect(rng, k, img.size());
      EXPECT_EQ(route_effect(b, img, spec, &client).image, apply_effect(img, spec))
          << backend_name(b) << " " << effect_name(k);
    }
  }
}

TEST(HttpTest, ServesEnvelopeOverEphemeralPort) {
  ProcessingService service;
  HttpServer server(service);
  const int port = server.bind("127.0.0.1", 0);
  ASSERT_GT(port, 0);
  std::thread thread([&] { server.listen(); });
  while (!server.running()) std::this_thread::yield();

  HttpTransport transport("127.0.0.1", port);
  FailoverClient client(transport);
  client.ping();
  std::mt19937 rng(12);
  const RasterImage img = noise_image(rng, 31, 9, true);
  for (const EffectSpec& spec : {EffectSpec{fx::Sepia{}}, EffectSpec{fx::FlipH{}},
                                 EffectSpec{fx::Opacity{0.3}}, EffectSpec{fx::Border{2, {}}}}) {
    EXPECT_EQ(client.apply_effect(img, spec), apply_effect(img, spec));
  }
  const json raw = transport.round_trip({{"op", "nope"}});
  EXPECT_EQ(raw["error_code"], 4001);
  try {
    client.apply_effect(img, fx::Hue{});
    json req = make_apply_effect_request(img, fx::Invert{});
    req["args"]["effect"] = "sparkle";
    EXPECT_EQ(transport.round_trip(req)["error_code"], 4003);
  } catch (...) {
    ADD_FAILURE();
  }

  server.stop();
  thread.join();
}

TEST(HttpTest, UnreachableServiceAfterRetries) {
  ProcessingService service;
  int port = 0;
  {
    HttpServer probe(service);
    port = probe.bind("127.0.0.1", 0);
  }
  HttpTransport transport("127.0.0.1", port, 2);
  FailoverClient client(transport);
  EXPECT_THROW(client.ping(), ServiceUnreachable);
}

}  // namespace
}  // namespace photocomp
