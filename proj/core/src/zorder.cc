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

#include "photocomp/zorder.h"

#include <algorithm>
#include <utility>

namespace photocomp {

void ZOrderArray::insert(std::string id) {
  if (position_of(id)) throw ZOrderError("duplicate photo id '" + id + "'");
  ids_.push_back(std::move(id));
}

void ZOrderArray::send_to_back(std::string_view id) {
  std::size_t pos = require(id);
  std::string ejected = std::move(ids_[pos]);
  for (; pos > 0; --pos) ids_[pos] = std::move(ids_[pos - 1]);
  ids_[0] = std::move(ejected);
}

void ZOrderArray::bring_to_front(std::string_view id) {
  std::size_t pos = require(id);
  std::string ejected = std::move(ids_[pos]);
  for (; pos + 1 < ids_.size(); ++pos) ids_[pos] = std::move(ids_[pos + 1]);
  ids_.back() = std::move(ejected);
}

std::optional<std::size_t> ZOrderArray::position_of(std::string_view id) const {
  const auto it = std::find(ids_.begin(), ids_.end(), id);
  if (it == ids_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - ids_.begin());
}

int ZOrderArray::z_of(std::string_view id) const {
  return z_base_ + static_cast<int>(require(id));
}

std::size_t ZOrderArray::require(std::string_view id) const {
  const auto pos = position_of(id);
  if (!pos) throw ZOrderError("unknown photo id '" + std::string(id) + "'");
  return *pos;
}

}  // namespace photocomp
