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

#include "photocomp/cost.h"

#include <cmath>

namespace photocomp {

double CostReport::virtual_ms(const CostModel& model) const {
  const double work = static_cast<double>(work_units());
  const double compute = std::isinf(model.throughput) ? 0.0 : work / model.throughput;
  return compute + static_cast<double>(ops) * model.per_op_overhead_ms +
         static_cast<double>(remote_calls) * model.remote_latency_ms;
}

CostReport& CostReport::operator+=(const CostReport& other) {
  clear_px += other.clear_px;
  draw_px += other.draw_px;
  effect_px += other.effect_px;
  remote_calls += other.remote_calls;
  ops += other.ops;
  frames += other.frames;
  return *this;
}

}  // namespace photocomp
