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

#include "effect_json.h"

#include <cmath>
#include <set>

namespace photocomp::detail {
namespace {

using nlohmann::json;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

[[noreturn]] void fail(EffectJsonFault fault, const std::string& message) {
  throw EffectJsonError(fault, message);
}

const json& field(const json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) fail(EffectJsonFault::kMissing, std::string("missing '") + key + "'");
  return *it;
}

double number(const json& obj, const char* key) {
  const json& v = field(obj, key);
  if (!v.is_number()) fail(EffectJsonFault::kBadValue, std::string("'") + key + "' must be a number");
  return v.get<double>();
}

int integer(const json& obj, const char* key) {
  const json& v = field(obj, key);
  if (!v.is_number_integer()) {
    fail(EffectJsonFault::kBadValue, std::string("'") + key + "' must be an integer");
  }
  return v.get<int>();
}

template <std::size_t N>
std::array<int, N> int_array(const json& obj, const char* key) {
  const json& v = field(obj, key);
  if (!v.is_array() || v.size() != N) {
    fail(EffectJsonFault::kBadValue,
         std::string("'") + key + "' must be an array of " + std::to_string(N) + " integers");
  }
  std::array<int, N> out{};
  for (std::size_t i = 0; i < N; ++i) {
    if (!v[i].is_number_integer()) {
      fail(EffectJsonFault::kBadValue, std::string("'") + key + "' must hold integers");
    }
    out[i] = v[i].get<int>();
  }
  return out;
}

std::set<std::string> allowed_params(EffectKind kind) {
  switch (kind) {
    case EffectKind::kBrightness: return {"delta"};
    case EffectKind::kContrast: return {"factor"};
    case EffectKind::kHue: return {"degrees"};
    case EffectKind::kSaturate: return {"factor"};
    case EffectKind::kBlackWhite: return {"threshold"};
    case EffectKind::kOpacity: return {"alpha"};
    case EffectKind::kBorder: return {"width", "color"};
    case EffectKind::kRedEye: return {"region"};
    default: return {};
  }
}

}  // namespace

json effect_to_json(const EffectSpec& spec, std::string_view kind_key) {
  json out = json::object();
  out[std::string(kind_key)] = std::string(effect_name(kind_of(spec)));
  std::visit(Overloaded{
                 [&](const fx::Brightness& p) { out["delta"] = p.delta; },
                 [&](const fx::Contrast& p) { out["factor"] = p.factor; },
                 [&](const fx::Hue& p) { out["degrees"] = p.degrees; },
                 [&](const fx::Saturate& p) { out["factor"] = p.factor; },
                 [&](const fx::BlackWhite& p) { out["threshold"] = p.threshold; },
                 [&](const fx::Opacity& p) { out["alpha"] = p.alpha; },
                 [&](const fx::Border& p) {
                   out["width"] = p.width;
                   out["color"] = {p.color.r, p.color.g, p.color.b, p.color.a};
                 },
                 [&](const fx::RedEye& p) {
                   out["region"] = {p.region.x, p.region.y, p.region.w, p.region.h};
                 },
                 [](const auto&) {},
             },
             spec);
  return out;
}

EffectSpec effect_from_json(const json& obj, std::string_view kind_key) {
  if (!obj.is_object()) fail(EffectJsonFault::kNotObject, "effect must be an object");
  const std::string key(kind_key);
  const json& name = field(obj, key.c_str());
  if (!name.is_string()) fail(EffectJsonFault::kBadValue, "effect kind must be a string");
  const auto kind = effect_kind_from_name(name.get<std::string>());
  if (!kind) fail(EffectJsonFault::kUnknownKind, "unknown effect kind '" + name.get<std::string>() + "'");

  const std::set<std::string> allowed = allowed_params(*kind);
  for (const auto& [k, v] : obj.items()) {
    if (k != key && !allowed.contains(k)) {
      fail(EffectJsonFault::kUnknownField,
           "unknown field '" + k + "' for effect '" + std::string(effect_name(*kind)) + "'");
    }
  }

  EffectSpec spec = default_effect(*kind);
  switch (*kind) {
    case EffectKind::kBrightness: spec = fx::Brightness{integer(obj, "delta")}; break;
    case EffectKind::kContrast: spec = fx::Contrast{number(obj, "factor")}; break;
    case EffectKind::kHue: spec = fx::Hue{number(obj, "degrees")}; break;
    case EffectKind::kSaturate: spec = fx::Saturate{number(obj, "factor")}; break;
    case EffectKind::kBlackWhite: spec = fx::BlackWhite{integer(obj, "threshold")}; break;
    case EffectKind::kOpacity: spec = fx::Opacity{number(obj, "alpha")}; break;
    case EffectKind::kBorder: {
      const auto c = int_array<4>(obj, "color");
      for (int ch : c) {
        if (ch < 0 || ch > 255) fail(EffectJsonFault::kBadValue, "border color channel out of range");
      }
      spec = fx::Border{integer(obj, "width"),
                        Rgba{static_cast<std::uint8_t>(c[0]), static_cast<std::uint8_t>(c[1]),
                             static_cast<std::uint8_t>(c[2]), static_cast<std::uint8_t>(c[3])}};
      break;
    }
    case EffectKind::kRedEye: {
      const auto r = int_array<4>(obj, "region");
      spec = fx::RedEye{Rect{r[0], r[1], r[2], r[3]}};
      break;
    }
    default: break;
  }
  try {
    validate(spec);
  } catch (const EffectParamError& e) {
    fail(EffectJsonFault::kBadValue, e.what());
  }
  return spec;
}

}  // namespace photocomp::detail

namespace photocomp {
namespace {

nlohmann::json param_number(const std::string& key, const std::string& text) {
  std::size_t used = 0;
  try {
    if (text.find_first_of(".eE") == std::string::npos) {
      const long long v = std::stoll(text, &used);
      if (used == text.size()) return v;
    } else {
      const double v = std::stod(text, &used);
      if (used == text.size()) return v;
    }
  } catch (const std::exception&) {
  }
  throw EffectParamError("parameter '" + key + "' is not a number: '" + text + "'");
}

}  // namespace

EffectSpec effect_from_params(std::string_view kind,
                              const std::vector<std::pair<std::string, std::string>>& params) {
  nlohmann::json obj = {{"kind", std::string(kind)}};
  for (const auto& [key, value] : params) {
    if (value.find(',') == std::string::npos) {
      obj[key] = param_number(key, value);
      continue;
    }
    nlohmann::json list = nlohmann::json::array();
    std::size_t begin = 0;
    while (true) {
      const std::size_t comma = value.find(',', begin);
      list.push_back(param_number(key, value.substr(begin, comma - begin)));
      if (comma == std::string::npos) break;
      begin = comma + 1;
    }
    obj[key] = std::move(list);
  }
  try {
    return detail::effect_from_json(obj, "kind");
  } catch (const detail::EffectJsonError& e) {
    throw EffectParamError(e.what());
  }
}

}  // namespace photocomp
