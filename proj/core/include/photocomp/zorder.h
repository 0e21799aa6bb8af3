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

#ifndef PHOTOCOMP_ZORDER_H_
#define PHOTOCOMP_ZORDER_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace photocomp {

class ZOrderError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Global stacking array for one drawing surface. Position 0 is the backmost
/// photo and the photo at position i has z-index z_base + i, so the z-values
/// are always exactly {z_base, ..., z_base + size() - 1}.
class ZOrderArray {
 public:
  explicit ZOrderArray(int z_base = 0) : z_base_(z_base) {}

  /// Appends `id` at the front. Its z-index is z_base plus the number of
  /// photos already present. Throws ZOrderError on a duplicate id.
  void insert(std::string id);

  /// Ejects `id`, right-shifts every photo that was behind it by one slot and
  /// reinserts it at position 0. Throws ZOrderError for an unknown id.
  void send_to_back(std::string_view id);

  /// Mirror of send_to_back using a left shift; `id` ends at size() - 1.
  void bring_to_front(std::string_view id);

  /// Back-to-front copy of the ids.
  std::vector<std::string> draw_order() const { return ids_; }

  std::optional<std::size_t> position_of(std::string_view id) const;
  /// Throws ZOrderError for an unknown id.
  int z_of(std::string_view id) const;

  int z_base() const { return z_base_; }
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  const std::string& at(std::size_t position) const { return ids_.at(position); }

  bool operator==(const ZOrderArray&) const = default;

 private:
  std::size_t require(std::string_view id) const;

  int z_base_;
  std::vector<std::string> ids_;
};

}  // namespace photocomp

#endif  // PHOTOCOMP_ZORDER_H_
