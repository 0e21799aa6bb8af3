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

#ifndef PHOTOCOMP_COST_H_
#define PHOTOCOMP_COST_H_

#include <cstdint>
#include <limits>

namespace photocomp {

/// Converts work units (pixels written) into virtual milliseconds.
struct CostModel {
  /// Pixels per virtual millisecond. May be +infinity (zero-cost limit).
  double throughput = 1000.0;
  /// Fixed virtual ms charged once per reported operation.
  double per_op_overhead_ms = 0.0;
  /// Virtual ms added for every effect routed through the processing service.
  double remote_latency_ms = 50.0;

  static constexpr double kInfiniteThroughput = std::numeric_limits<double>::infinity();
};

/// Work accounting for one render or one experiment step. work_units is an
/// exact function of the scene and the action; nothing here reads a clock.
struct CostReport {
  std::int64_t clear_px = 0;
  std::int64_t draw_px = 0;
  std::int64_t effect_px = 0;
  std::int64_t remote_calls = 0;
  std::int64_t ops = 0;
  std::int64_t frames = 0;

  std::int64_t work_units() const { return clear_px + draw_px + effect_px; }
  double virtual_ms(const CostModel& model) const;

  CostReport& operator+=(const CostReport& other);
  bool operator==(const CostReport&) const = default;
};

inline CostReport operator+(CostReport a, const CostReport& b) { return a += b; }

}  // namespace photocomp

#endif  // PHOTOCOMP_COST_H_
