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

#ifndef PHOTOCOMP_SRC_EFFECT_JSON_H_
#define PHOTOCOMP_SRC_EFFECT_JSON_H_

#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "photocomp/effect_spec.h"

namespace photocomp::detail {

enum class EffectJsonFault { kNotObject, kUnknownKind, kUnknownField, kMissing, kBadValue };

class EffectJsonError : public std::runtime_error {
 public:
  EffectJsonError(EffectJsonFault fault, const std::string& what)
      : std::runtime_error(what), fault_(fault) {}
  EffectJsonFault fault() const { return fault_; }

 private:
  EffectJsonFault fault_;
};

// Params are flat keys next to the kind key:
//   {"kind":"brightness","delta":40}
//   {"kind":"border","width":4,"color":[r,g,b,a]}
//   {"kind":"redeye","region":[x,y,w,h]}
nlohmann::json effect_to_json(const EffectSpec& spec,
                              std::string_view kind_key = "kind");

/// Parses and range-checks an effect object. Range violations are reported as
/// kBadValue.
EffectSpec effect_from_json(const nlohmann::json& obj,
                            std::string_view kind_key = "kind");

}  // namespace photocomp::detail

#endif  // PHOTOCOMP_SRC_EFFECT_JSON_H_
