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

#ifndef PHOTOCOMP_FAILOVER_H_
#define PHOTOCOMP_FAILOVER_H_

#include <atomic>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "photocomp/capability.h"
#include "photocomp/effect_spec.h"
#include "photocomp/image.h"
#include "photocomp/image_store.h"

namespace photocomp {

// Single-endpoint processing service. Every request is one JSON envelope
//
//   {"op": str, "args": {...}, "image": <base64 P6> | {"key": str},
//    "alpha": <base64 P5, optional>}
//
// and every response is
//
//   {"status": "ok"|"error", "error_code": int|null, "message": str,
//    "payload": {...}|null}
//
// Ops:
//   ping         -> payload {"service": "photocomp"}
//   apply_effect -> args {"effect": kind, <params>}; payload {"image", "width",
//                   "height"[, "alpha"]}
//   put_image    -> args {"key": str}; stores the image; payload {"key": str}
enum class WireError : int {
  kUnknownOp = 4001,
  kMalformedArgs = 4002,
  kUnknownEffect = 4003,
  kUndecodableImage = 4004,
  kInternal = 5001,
};

nlohmann::json ok_response(nlohmann::json payload);
nlohmann::json error_response(WireError code, std::string_view message);

/// Base64 image fields for an envelope: "image" always, "alpha" only when the
/// image is not fully opaque.
void attach_image(nlohmann::json& envelope, const RasterImage& image);

nlohmann::json make_apply_effect_request(const RasterImage& image, const EffectSpec& spec);

class ProcessingService {
 public:
  /// `store` backs put_image and keyed image references; without one, keyed
  /// requests fail with 4004.
  explicit ProcessingService(std::shared_ptr<ImageStore> store = nullptr);

  /// Never throws; every failure is encoded in the response.
  nlohmann::json dispatch(const nlohmann::json& request) const;
  /// Text form used by the HTTP endpoint. Unparseable bodies yield 4002.
  std::string handle(std::string_view body) const;

 private:
  nlohmann::json dispatch_or_throw(const nlohmann::json& request) const;

  std::shared_ptr<ImageStore> store_;
};

/// The service answered with status "error".
class ServiceError : public std::runtime_error {
 public:
  ServiceError(int code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  int code() const { return code_; }

 private:
  int code_;
};

/// Remote transport gave up after its retry budget. Callers abort the
/// operation or retry later.
class ServiceUnreachable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Transport {
 public:
  virtual ~Transport() = default;
  virtual nlohmann::json round_trip(const nlohmann::json& request) = 0;
};

/// In-process transport: calls dispatch directly.
class LocalTransport : public Transport {
 public:
  explicit LocalTransport(const ProcessingService& service) : service_(service) {}
  nlohmann::json round_trip(const nlohmann::json& request) override;

 private:
  const ProcessingService& service_;
};

/// POST /api over HTTP. Connection failures are retried up to `attempts`
/// times before ServiceUnreachable is thrown.
class HttpTransport : public Transport {
 public:
  HttpTransport(std::string host, int port, int attempts = 3);
  nlohmann::json round_trip(const nlohmann::json& request) override;

 private:
  std::string host_;
  int port_;
  int attempts_;
};

class FailoverClient {
 public:
  explicit FailoverClient(Transport& transport) : transport_(transport) {}

  /// Throws ServiceError for an error response and ServiceUnreachable from
  /// remote transports.
  RasterImage apply_effect(const RasterImage& image, const EffectSpec& spec);
  void ping();
  std::int64_t calls() const { return calls_; }

 private:
  nlohmann::json call(const nlohmann::json& request);

  Transport& transport_;
  std::atomic<std::int64_t> calls_{0};
};

class UnsupportedEffectError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class Route { kLocal, kRemote };

struct RoutedImage {
  RasterImage image;
  Route route;
};

/// Runs `spec` locally when `backend` supports it, otherwise through
/// `client`. Both paths produce the same pixels. Throws
/// UnsupportedEffectError when a fallback is needed and `client` is null.
RoutedImage route_effect(BackendKind backend, const RasterImage& image, const EffectSpec& spec,
                         FailoverClient* client);

/// Blocking HTTP front end for a ProcessingService (single POST /api route).
class HttpServer {
 public:
  explicit HttpServer(const ProcessingService& service);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Binds to `port` (0 picks a free one) and returns the bound port, or -1.
  int bind(const std::string& host, int port);
  /// Serves until stop(); returns false if the listener failed.
  bool listen();
  void stop();
  bool running() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace photocomp

#endif  // PHOTOCOMP_FAILOVER_H_
