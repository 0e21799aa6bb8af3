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

#ifndef PHOTOCOMP_HARNESS_H_
#define PHOTOCOMP_HARNESS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "photocomp/backend.h"
#include "photocomp/cost.h"
#include "photocomp/image_store.h"
#include "photocomp/photo.h"
#include "photocomp/viewport.h"

namespace photocomp {

class HarnessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// floor(t / resolution) * resolution. Throws std::invalid_argument for a
/// non-positive resolution.
double quantize_clock(double t, double resolution);

/// Monotone virtual clock in milliseconds. Never reads the wall clock.
class VirtualClock {
 public:
  double now() const { return now_; }
  void advance(double ms);
  /// Moves forward to the next multiple of `resolution` (no-op when already
  /// on one).
  void idle_to_next_tick(double resolution);

 private:
  double now_ = 0.0;
};

/// Duration between two virtual instants, measured from quantized endpoints
/// when `resolution` is set.
double measured_duration(double start, double end, std::optional<double> resolution);

/// Counter-based SplitMix64.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform in [0, 1) with 53 random bits.
  double next_unit();
  void discard(std::uint64_t n) { state_ += n * kGolden; }

  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

 private:
  std::uint64_t state_;
};

inline constexpr ScreenSpec kHarnessScreen{1920, 1200};
inline constexpr Size kExperimentSizes[] = {{480, 360}, {576, 384}, {900, 600}, {1280, 720}};
inline constexpr char kImageClasses[] = {'b', 'f'};

/// "b480x360" style key of a generated source image.
std::string experiment_image_key(char image_class, Size size);

/// Procedural source image. Class 'b' is detailed per-pixel noise, class 'f'
/// a few flat color regions.
RasterImage make_test_image(char image_class, Size size);

/// Puts every experiment image (both classes, all four sizes) in `store`.
void populate_experiment_images(ImageStore& store);

struct HarnessConfig {
  ScreenSpec screen = kHarnessScreen;
  CostModel model;
  std::optional<double> quantize_ms;
  std::uint64_t seed = 1;
  /// When set, every experiment image must be present here; the experiments
  /// then also render real pixels if `produce_pixels` is true.
  const ImageStore* images = nullptr;
  bool produce_pixels = false;
};

// --- Experiment A: application time of single operations -------------------

enum class ExpAOp { kRotate70, kGrayscale, kInvert, kCrop };
inline constexpr ExpAOp kAllExpAOps[] = {ExpAOp::kRotate70, ExpAOp::kGrayscale, ExpAOp::kInvert,
                                         ExpAOp::kCrop};
std::string_view exp_a_op_name(ExpAOp op);

struct ExpARow {
  BackendKind backend;
  std::string image;
  Size size;
  ExpAOp op;
  int trial = 1;
  double virtual_ms = 0.0;
  std::int64_t work_units = 0;
  CostReport cost;
};

/// Two trials per (backend, image, op); one photo centered on the screen.
/// Each op is timed from an idle clock aligned to the next timer tick.
std::vector<ExpARow> exp_a_run(const std::vector<BackendKind>& backends,
                               const HarnessConfig& config);

// --- Experiment B: scripted drag -------------------------------------------

struct TraceSample {
  double t = 0.0;  // virtual ms
  double x = 0.0;  // screen px, relative to the start point
  double y = 0.0;
};

struct MouseTrace {
  std::vector<TraceSample> samples;
  double duration_ms() const { return samples.empty() ? 0.0 : samples.back().t; }
};

inline constexpr int kTraceSamples = 269;
inline constexpr double kTraceDurationMs = 2681.0;
inline constexpr double kTraceDistancePx = 503.0;
inline constexpr double kFrameBudgetMs = 40.0;

MouseTrace make_mouse_trace();

struct ExpBResult {
  BackendKind backend;
  Size size;
  bool inverted = false;
  double delta_ms = 0.0;
  std::int64_t frames = 0;
  double utilization = 0.0;
  double completion_ms = 0.0;
  double busy_ms = 0.0;
  std::int64_t over_budget_frames = 0;
};

/// Replays the trace as a drag of one class 'b' photo. Every sample is a
/// queued mouse event: frame k starts at max(previous finish, t_k) and takes
/// its own virtual cost.
ExpBResult exp_b_run(BackendKind backend, Size size, bool inverted, const HarnessConfig& config);

std::vector<ExpBResult> exp_b_sweep(const std::vector<BackendKind>& backends,
                                    const HarnessConfig& config);

// --- Experiment C: load simulation -----------------------------------------

struct StopRules {
  double load_timeout_ms = 15000.0;
  double unresponsive_timeout_ms = 30000.0;
  int max_photos = 100;
};

struct SimPlanEntry {
  int index = 0;
  bool centered = false;
  Size source_size;
  std::optional<double> rotation;
  std::optional<double> scale;
  std::optional<Rect> crop;
  PointF center;  // standard coordinates
};

/// Evaluates the load-simulation script for photo `i` (1-based). Random
/// placements put the whole rotated bounding box inside `screen`.
SimPlanEntry sim_plan(int i, std::uint64_t seed, const ScreenSpec& screen = kHarnessScreen);

/// Source key of a plan entry ('b' class at the entry's size).
std::string sim_source_key(const SimPlanEntry& entry);
PhotoObject sim_photo(const SimPlanEntry& entry);

struct ExpCProbe {
  int count = 0;
  double probe_ms = 0.0;
};

struct ExpCResult {
  BackendKind backend;
  std::vector<ExpCProbe> probes;
  std::vector<double> load_ms;  // one per loaded photo
  std::string stop_rule;        // "load_timeout", "unresponsive" or "max_photos"
  int stop_count = 0;
};

inline constexpr double kProbeDegrees = -111.8;

/// Loads photos 1.. per sim_plan; after every 5th, rotates the first
/// centered photo by kProbeDegrees, times it and restores it.
ExpCResult exp_c_run(BackendKind backend, const HarnessConfig& config,
                     const StopRules& rules = {});

// --- Output ----------------------------------------------------------------

void write_exp_a_csv(std::ostream& out, const std::vector<ExpARow>& rows);
void write_exp_b_csv(std::ostream& out, const std::vector<ExpBResult>& rows);
void write_exp_c_csv(std::ostream& out, const std::vector<ExpCResult>& runs);

struct PlotSeries {
  std::string name;
  std::vector<std::pair<double, double>> points;
};

/// Minimal SVG line chart.
void write_svg_plot(std::ostream& out, const std::string& title, const std::string& x_label,
                    const std::string& y_label, const std::vector<PlotSeries>& series);

std::vector<PlotSeries> exp_a_plot_series(const std::vector<ExpARow>& rows);
std::vector<PlotSeries> exp_b_plot_series(const std::vector<ExpBResult>& rows);
std::vector<PlotSeries> exp_c_plot_series(const std::vector<ExpCResult>& runs);

}  // namespace photocomp

#endif  // PHOTOCOMP_HARNESS_H_
