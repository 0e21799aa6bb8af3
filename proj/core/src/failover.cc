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

#include "photocomp/failover.h"

#include <string>
#include <utility>
#include <vector>

#include "absl/strings/escaping.h"
#include "effect_json.h"
#include "photocomp/effects.h"
#include "photocomp/ppm.h"

namespace photocomp {
namespace {

using nlohmann::json;

// Internal control flow for dispatch: carries the wire error code.
class WireFault : public std::runtime_error {
 public:
  WireFault(WireError code, const std::string& message)
      : std::runtime_error(message), code(code) {}
  WireError code;
};

std::string to_base64(const std::vector<std::uint8_t>& bytes) {
  return absl::Base64Escape(
      absl::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
}

std::vector<std::uint8_t> from_base64(const json& field, const char* what) {
  if (!field.is_string()) throw WireFault(WireError::kUndecodableImage, std::string(what) + " must be a base64 string");
  std::string decoded;
  if (!absl::Base64Unescape(field.get<std::string>(), &decoded)) {
    throw WireFault(WireError::kUndecodableImage, std::string(what) + " is not valid base64");
  }
  return {decoded.begin(), decoded.end()};
}

RasterImage decode_image_fields(const json& request, const ImageStore* store) {
  const auto it = request.find("image");
  if (it == request.end()) throw WireFault(WireError::kUndecodableImage, "missing image");
  if (it->is_object()) {
    const auto key = it->find("key");
    if (key == it->end() || !key->is_string()) {
      throw WireFault(WireError::kUndecodableImage, "image reference needs a string key");
    }
    const auto image = store ? store->get(key->get<std::string>()) : nullptr;
    if (!image) throw WireFault(WireError::kUndecodableImage, "no stored image '" + key->get<std::string>() + "'");
    return *image;
  }
  try {
    RasterImage image = decode_ppm(from_base64(*it, "image"));
    if (const auto alpha = request.find("alpha"); alpha != request.end()) {
      apply_alpha_pgm(from_base64(*alpha, "alpha"), image);
    }
    return image;
  } catch (const PpmError& e) {
    throw WireFault(WireError::kUndecodableImage, e.what());
  }
}

const json& require_args(const json& request) {
  const auto it = request.find("args");
  if (it == request.end() || !it->is_object()) {
    throw WireFault(WireError::kMalformedArgs, "args must be an object");
  }
  return *it;
}

}  // namespace

json ok_response(json payload) {
  return {{"status", "ok"}, {"error_code", nullptr}, {"message", ""}, {"payload", std::move(payload)}};
}

json error_response(WireError code, std::string_view message) {
  return {{"status", "error"},
          {"error_code", static_cast<int>(code)},
          {"message", std::string(message)},
          {"payload", nullptr}};
}

void attach_image(json& envelope, const RasterImage& image) {
  envelope["image"] = to_base64(encode_ppm(image));
  if (!is_opaque(image)) envelope["alpha"] = to_base64(encode_alpha_pgm(image));
}

json make_apply_effect_request(const RasterImage& image, const EffectSpec& spec) {
  json request = {{"op", "apply_effect"}, {"args", detail::effect_to_json(spec, "effect")}};
  attach_image(request, image);
  return request;
}

// --- service ---------------------------------------------------------------

ProcessingService::ProcessingService(std::shared_ptr<ImageStore> store)
    : store_(std::move(store)) {}

json ProcessingService::dispatch(const json& request) const {
  try {
    return dispatch_or_throw(request);
  } catch (const WireFault& fault) {
    return error_response(fault.code, fault.what());
  } catch (const std::exception& e) {
    return error_response(WireError::kInternal, std::string("internal failure: ") + e.what());
  } catch (...) {
    return error_response(WireError::kInternal, "internal failure");
  }
}

json ProcessingService::dispatch_or_throw(const json& request) const {
  if (!request.is_object()) throw WireFault(WireError::kMalformedArgs, "envelope must be an object");
  const auto op_it = request.find("op");
  if (op_it == request.end() || !op_it->is_string()) {
    throw WireFault(WireError::kMalformedArgs, "envelope needs a string 'op'");
  }
  const std::string op = op_it->get<std::string>();

  if (op == "ping") return ok_response({{"service", "photocomp"}});

  if (op == "apply_effect") {
    const json& args = require_args(request);
    EffectSpec spec;
    try {
      spec = detail::effect_from_json(args, "effect");
    } catch (const detail::EffectJsonError& e) {
      throw WireFault(e.fault() == detail::EffectJsonFault::kUnknownKind ? WireError::kUnknownEffect
                                                                         : WireError::kMalformedArgs,
                      e.what());
    }
    const RasterImage input = decode_image_fields(request, store_.get());
    const RasterImage output = apply_effect(input, spec);
    json payload = {{"width", output.width()}, {"height", output.height()}};
    attach_image(payload, output);
    return ok_response(std::move(payload));
  }

  if (op == "put_image") {
    const json& args = require_args(request);
    const auto key = args.find("key");
    if (key == args.end() || !key->is_string() || !ImageStore::valid_key(key->get<std::string>())) {
      throw WireFault(WireError::kMalformedArgs, "put_image needs a valid string 'key'");
    }
    if (!store_) throw WireFault(WireError::kMalformedArgs, "service has no image store");
    store_->put(key->get<std::string>(), decode_image_fields(request, nullptr));
    return ok_response({{"key", key->get<std::string>()}});
  }

  throw WireFault(WireError::kUnknownOp, "unknown op '" + op + "'");
}

std::string ProcessingService::handle(std::string_view body) const {
  json request;
  try {
    request = json::parse(body);
  } catch (const json::parse_error& e) {
    return error_response(WireError::kMalformedArgs, std::string("malformed JSON: ") + e.what()).dump();
  }
  return dispatch(request).dump();
}

// --- client ----------------------------------------------------------------

json LocalTransport::round_trip(const json& request) { return service_.dispatch(request); }

json FailoverClient::call(const json& request) {
  ++calls_;
  json response = transport_.round_trip(request);
  if (!response.is_object() || !response.contains("status")) {
    throw ServiceError(static_cast<int>(WireError::kInternal), "malformed response envelope");
  }
  if (response["status"] != "ok") {
    const json& code = response["error_code"];
    throw ServiceError(code.is_number_integer() ? code.get<int>() : static_cast<int>(WireError::kInternal),
                       response.value("message", std::string("service error")));
  }
  return response;
}

void FailoverClient::ping() { call({{"op", "ping"}}); }

RasterImage FailoverClient::apply_effect(const RasterImage& image, const EffectSpec& spec) {
  const json response = call(make_apply_effect_request(image, spec));
  const json& payload = response["payload"];
  try {
    if (!payload.is_object()) throw WireFault(WireError::kInternal, "ok response without payload");
    RasterImage out = decode_ppm(from_base64(payload.at("image"), "image"));
    if (payload.contains("alpha")) apply_alpha_pgm(from_base64(payload["alpha"], "alpha"), out);
    return out;
  } catch (const std::exception& e) {
    throw ServiceError(static_cast<int>(WireError::kInternal),
                       std::string("undecodable service payload: ") + e.what());
  }
}

RoutedImage route_effect(BackendKind backend, const RasterImage& image, const EffectSpec& spec,
                         FailoverClient* client) {
  if (supports(backend, kind_of(spec))) {
    return {photocomp::apply_effect(image, spec), Route::kLocal};
  }
  if (client == nullptr) {
    throw UnsupportedEffectError(std::string(effect_name(kind_of(spec))) + " is not supported by the " +
                                 std::string(backend_name(backend)) + " backend and no failover is configured");
  }
  return {client->apply_effect(image, spec), Route::kRemote};
}

}  // namespace photocomp
