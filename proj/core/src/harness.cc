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

#include "photocomp/harness.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "photocomp/effects.h"

namespace photocomp {
namespace {

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

std::string size_text(Size s) { return std::to_string(s.width) + "x" + std::to_string(s.height); }

Size resolve_source(const HarnessConfig& config, const std::string& key, Size built_in) {
  if (config.images == nullptr) return built_in;
  const auto size = config.images->size_of(key);
  if (!size) throw HarnessError("missing source image '" + key + "'");
  return *size;
}

std::unique_ptr<RenderBackend> make_backend(BackendKind kind, const HarnessConfig& config) {
  if (config.produce_pixels && config.images == nullptr) {
    throw HarnessError("pixel output needs source images");
  }
  BackendOptions options;
  options.images = config.images;
  options.produce_pixels = config.produce_pixels;
  return RenderBackend::create(kind, config.screen, options);
}

PhotoObject apply_exp_a_op(PhotoObject photo, ExpAOp op) {
  switch (op) {
    case ExpAOp::kRotate70: return transform_photo(std::move(photo), action::Rotate{70.0});
    case ExpAOp::kGrayscale: photo.effects.emplace_back(fx::Grayscale{}); return photo;
    case ExpAOp::kInvert: photo.effects.emplace_back(fx::Invert{}); return photo;
    case ExpAOp::kCrop: return crop_photo(std::move(photo), Rect{50, 50, 300, 300});
  }
  return photo;
}

std::uint8_t noise_byte(std::uint64_t v) {
  SplitMix64 g(v);
  return static_cast<std::uint8_t>(g.next() >> 56);
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

double quantize_clock(double t, double resolution) {
  if (!(resolution > 0.0)) throw std::invalid_argument("clock resolution must be positive");
  return std::floor(t / resolution) * resolution;
}

void VirtualClock::advance(double ms) {
  if (ms < 0.0 || std::isnan(ms)) throw std::invalid_argument("virtual time cannot go backwards");
  now_ += ms;
}

void VirtualClock::idle_to_next_tick(double resolution) {
  const double tick = quantize_clock(now_, resolution);
  if (tick != now_) now_ = tick + resolution;
}

double measured_duration(double start, double end, std::optional<double> resolution) {
  if (!resolution) return end - start;
  return quantize_clock(end, *resolution) - quantize_clock(start, *resolution);
}

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += kGolden);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double SplitMix64::next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::string experiment_image_key(char image_class, Size size) {
  return std::string(1, image_class) + size_text(size);
}

RasterImage make_test_image(char image_class, Size size) {
  if (image_class != 'b' && image_class != 'f') {
    throw std::invalid_argument("image class must be 'b' or 'f'");
  }
  RasterImage image(size.width, size.height, Rgba{255, 255, 255, 255});
  for (int y = 0; y < size.height; ++y) {
    for (int x = 0; x < size.width; ++x) {
      Rgba px;
      if (image_class == 'b') {
        const std::uint64_t base = (static_cast<std::uint64_t>(y) << 32) | static_cast<std::uint32_t>(x);
        px = {noise_byte(base * 3), noise_byte(base * 3 + 1), noise_byte(base * 3 + 2), 255};
      } else {
        const bool right = x * 2 >= size.width;
        const bool lower = y * 2 >= size.height;
        static constexpr Rgba kFlat[4] = {
            {70, 130, 180, 255}, {240, 230, 140, 255}, {34, 139, 34, 255}, {205, 92, 92, 255}};
        px = kFlat[(lower ? 2 : 0) + (right ? 1 : 0)];
      }
      image.set(x, y, px);
    }
  }
  return image;
}

void populate_experiment_images(ImageStore& store) {
  for (char cls : kImageClasses) {
    for (Size size : kExperimentSizes) store.put(experiment_image_key(cls, size), make_test_image(cls, size));
  }
}

// --- Experiment A ----------------------------------------------------------

std::string_view exp_a_op_name(ExpAOp op) {
  switch (op) {
    case ExpAOp::kRotate70: return "rotate70";
    case ExpAOp::kGrayscale: return "grayscale";
    case ExpAOp::kInvert: return "invert";
    case ExpAOp::kCrop: return "crop";
  }
  return "unknown";
}

std::vector<ExpARow> exp_a_run(const std::vector<BackendKind>& backends,
                               const HarnessConfig& config) {
  std::vector<ExpARow> rows;
  const PointF center{SceneDocument::kStandardViewport.width / 2.0,
                      SceneDocument::kStandardViewport.height / 2.0};
  for (BackendKind kind : backends) {
    for (char cls : kImageClasses) {
      for (Size built_in : kExperimentSizes) {
        const std::string key = experiment_image_key(cls, built_in);
        const Size size = resolve_source(config, key, built_in);
        for (ExpAOp op : kAllExpAOps) {
          for (int trial = 1; trial <= 2; ++trial) {
            auto backend = make_backend(kind, config);
            SceneDocument scene;
            PhotoObject photo;
            photo.id = "photo";
            photo.source = key;
            photo.source_size = size;
            photo.center = center;
            const PhotoObject before = scene.add(photo);
            backend->render_full(scene);

            scene.replace(apply_exp_a_op(before, op));
            VirtualClock clock;
            if (config.quantize_ms) clock.idle_to_next_tick(*config.quantize_ms);
            const double start = clock.now();
            const CostReport cost = backend->render_update(scene, "photo", &before).cost;
            clock.advance(cost.virtual_ms(config.model));

            ExpARow row{kind, key, size, op, trial, 0.0, cost.work_units(), cost};
            row.virtual_ms = measured_duration(start, clock.now(), config.quantize_ms);
            rows.push_back(std::move(row));
          }
        }
      }
    }
  }
  return rows;
}

// --- Experiment B ----------------------------------------------------------

MouseTrace make_mouse_trace() {
  MouseTrace trace;
  trace.samples.reserve(kTraceSamples);
  const int last = kTraceSamples - 1;
  for (int k = 0; k <= last; ++k) {
    trace.samples.push_back({k * kTraceDurationMs / last, 0.0, k * kTraceDistancePx / last});
  }
  return trace;
}

ExpBResult exp_b_run(BackendKind kind, Size size, bool inverted, const HarnessConfig& config) {
  const std::string key = experiment_image_key('b', size);
  const Size source = resolve_source(config, key, size);
  auto backend = make_backend(kind, config);

  const ScreenSpec& screen = config.screen;
  const PointF start{screen.width / 2.0, screen.height / 2.0 - kTraceDistancePx / 2.0};

  SceneDocument scene;
  PhotoObject photo;
  photo.id = "photo";
  photo.source = key;
  photo.source_size = source;
  photo.center = to_standard(screen, start);
  if (inverted) photo.effects.emplace_back(fx::Invert{});
  scene.add(photo);
  backend->render_full(scene);

  const MouseTrace trace = make_mouse_trace();
  ExpBResult result{kind, size, inverted};
  InteractionSession session = backend->begin_interaction(scene, "photo");
  double finish = 0.0;
  for (std::size_t k = 1; k < trace.samples.size(); ++k) {
    const TraceSample& s = trace.samples[k];
    const RenderResult frame = session.update(to_standard(screen, {start.x + s.x, start.y + s.y}));
    const double d = frame.cost.virtual_ms(config.model);
    finish = std::max(finish, s.t) + d;
    result.busy_ms += d;
    ++result.frames;
    if (d > kFrameBudgetMs) ++result.over_budget_frames;
  }
  session.end();

  result.completion_ms = finish;
  result.delta_ms = std::max(0.0, finish - kTraceDurationMs);
  result.utilization = result.busy_ms / std::max(finish, kTraceDurationMs);
  return result;
}

std::vector<ExpBResult> exp_b_sweep(const std::vector<BackendKind>& backends,
                                    const HarnessConfig& config) {
  std::vector<ExpBResult> rows;
  for (BackendKind kind : backends) {
    for (Size size : kExperimentSizes) {
      for (bool inverted : {false, true}) rows.push_back(exp_b_run(kind, size, inverted, config));
    }
  }
  return rows;
}

// --- Experiment C ----------------------------------------------------------

SimPlanEntry sim_plan(int i, std::uint64_t seed, const ScreenSpec& screen) {
  if (i < 1) throw std::invalid_argument("sim_plan index is 1-based");
  SimPlanEntry e;
  e.index = i;
  e.centered = i % 5 == 0;
  e.source_size = i % 2 == 0 ? Size{576, 384} : Size{900, 600};
  if (i % 3 == 0 && i % 5 != 0) {
    e.rotation = i % 2 == 0 ? -50.0 : 10.0;
  } else if (i % 5 == 0) {
    e.scale = 0.8;
  }
  if (i % 7 == 0) e.crop = Rect{50, 50, 300, 300};

  const PointF standard_center{SceneDocument::kStandardViewport.width / 2.0,
                               SceneDocument::kStandardViewport.height / 2.0};
  if (e.centered) {
    e.center = standard_center;
    return e;
  }
  e.center = standard_center;
  const Extents ext = rotated_extents(display_size(sim_photo(e)), e.rotation.value_or(0.0));
  const double s = screen.scale();
  const double bw = std::ceil(ext.width * s);
  const double bh = std::ceil(ext.height * s);

  SplitMix64 rng(seed);
  rng.discard(2 * static_cast<std::uint64_t>(i - 1));
  const double left = rng.next_unit() * std::max(0.0, screen.width - bw);
  const double top = rng.next_unit() * std::max(0.0, screen.height - bh);
  e.center = to_standard(screen, {left + bw / 2.0, top + bh / 2.0});
  return e;
}

std::string sim_source_key(const SimPlanEntry& entry) {
  return experiment_image_key('b', entry.source_size);
}

PhotoObject sim_photo(const SimPlanEntry& entry) {
  PhotoObject photo;
  photo.id = "p" + std::to_string(entry.index);
  photo.source = sim_source_key(entry);
  photo.source_size = entry.source_size;
  photo.center = entry.center;
  if (entry.crop) photo = crop_photo(std::move(photo), *entry.crop);
  if (entry.rotation) photo = transform_photo(std::move(photo), action::Rotate{*entry.rotation});
  if (entry.scale) photo = transform_photo(std::move(photo), action::Scale{*entry.scale});
  return photo;
}

ExpCResult exp_c_run(BackendKind kind, const HarnessConfig& config, const StopRules& rules) {
  auto backend = make_backend(kind, config);
  SceneDocument scene;
  backend->render_full(scene);

  ExpCResult result;
  result.backend = kind;
  std::string probe_id;
  for (int i = 1; i <= rules.max_photos; ++i) {
    const SimPlanEntry entry = sim_plan(i, config.seed, config.screen);
    PhotoObject photo = sim_photo(entry);
    photo.source_size = resolve_source(config, photo.source, photo.source_size);
    const std::string id = photo.id;
    scene.add(std::move(photo));

    const double load = backend->render_update(scene, id, nullptr).cost.virtual_ms(config.model);
    result.load_ms.push_back(load);
    if (load > rules.load_timeout_ms) {
      result.stop_rule = "load_timeout";
      result.stop_count = i;
      return result;
    }
    if (entry.centered && probe_id.empty()) probe_id = id;

    if (i % 5 == 0) {
      const PhotoObject before = scene.photo(probe_id);
      scene.replace(transform_photo(before, action::Rotate{kProbeDegrees}));
      const double probe =
          backend->render_update(scene, probe_id, &before).cost.virtual_ms(config.model);
      const PhotoObject rotated = scene.photo(probe_id);
      scene.replace(before);
      backend->render_update(scene, probe_id, &rotated);

      result.probes.push_back({i, measured_duration(0.0, probe, config.quantize_ms)});
      if (probe > rules.unresponsive_timeout_ms) {
        result.stop_rule = "unresponsive";
        result.stop_count = i;
        return result;
      }
    }
  }
  result.stop_rule = "max_photos";
  result.stop_count = rules.max_photos;
  return result;
}

// --- Output ----------------------------------------------------------------

void write_exp_a_csv(std::ostream& out, const std::vector<ExpARow>& rows) {
  out << "backend,image,op,trial,virtual_ms,work_units\n";
  for (const ExpARow& r : rows) {
    out << backend_name(r.backend) << ',' << r.image << ',' << exp_a_op_name(r.op) << ','
        << r.trial << ',' << fmt("%.3f", r.virtual_ms) << ',' << r.work_units << '\n';
  }
}

void write_exp_b_csv(std::ostream& out, const std::vector<ExpBResult>& rows) {
  out << "backend,size,effect,delta_ms,frames,utilization\n";
  for (const ExpBResult& r : rows) {
    out << backend_name(r.backend) << ',' << size_text(r.size) << ','
        << (r.inverted ? "invert" : "none") << ',' << fmt("%.3f", r.delta_ms) << ',' << r.frames
        << ',' << fmt("%.6f", r.utilization) << '\n';
  }
}

void write_exp_c_csv(std::ostream& out, const std::vector<ExpCResult>& runs) {
  out << "backend,count,probe_virtual_ms,stop_rule\n";
  for (const ExpCResult& run : runs) {
    for (const ExpCProbe& p : run.probes) {
      out << backend_name(run.backend) << ',' << p.count << ',' << fmt("%.3f", p.probe_ms)
          << ",none\n";
    }
    out << backend_name(run.backend) << ',' << run.stop_count << ",," << run.stop_rule << '\n';
  }
}

void write_svg_plot(std::ostream& out, const std::string& title, const std::string& x_label,
                    const std::string& y_label, const std::vector<PlotSeries>& series) {
  constexpr double kW = 720, kH = 440, kLeft = 80, kRight = 200, kTop = 40, kBottom = 60;
  static constexpr const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                            "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
                                            "#bcbd22", "#17becf", "#393b79", "#637939"};
  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = 0.0, y1 = -x0;
  for (const PlotSeries& s : series) {
    for (const auto& [x, y] : s.points) {
      x0 = std::min(x0, x);
      x1 = std::max(x1, x);
      y0 = std::min(y0, y);
      y1 = std::max(y1, y);
    }
  }
  if (!std::isfinite(x0)) x0 = 0, x1 = 1, y1 = 1;
  if (x1 <= x0) x1 = x0 + 1;
  if (y1 <= y0) y1 = y0 + 1;
  const double pw = kW - kLeft - kRight, ph = kH - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - x0) / (x1 - x0) * pw; };
  auto py = [&](double y) { return kTop + ph - (y - y0) / (y1 - y0) * ph; };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW << "\" height=\"" << kH
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << kW / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">"
      << xml_escape(title) << "</text>\n"
      << "<line x1=\"" << kLeft << "\" y1=\"" << kTop + ph << "\" x2=\"" << kLeft + pw
      << "\" y2=\"" << kTop + ph << "\" stroke=\"black\"/>\n"
      << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\""
      << kTop + ph << "\" stroke=\"black\"/>\n";
  for (int t = 0; t <= 4; ++t) {
    const double xv = x0 + (x1 - x0) * t / 4, yv = y0 + (y1 - y0) * t / 4;
    out << "<text x=\"" << px(xv) << "\" y=\"" << kTop + ph + 16 << "\" text-anchor=\"middle\">"
        << fmt("%g", xv) << "</text>\n"
        << "<text x=\"" << kLeft - 6 << "\" y=\"" << py(yv) + 4 << "\" text-anchor=\"end\">"
        << fmt("%g", yv) << "</text>\n";
  }
  out << "<text x=\"" << kLeft + pw / 2 << "\" y=\"" << kH - 16 << "\" text-anchor=\"middle\">"
      << xml_escape(x_label) << "</text>\n"
      << "<text x=\"18\" y=\"" << kTop + ph / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
      << kTop + ph / 2 << ")\">" << xml_escape(y_label) << "</text>\n";
  for (std::size_t i = 0; i < series.size(); ++i) {
    const char* color = kColors[i % std::size(kColors)];
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
    for (const auto& [x, y] : series[i].points) out << px(x) << ',' << py(y) << ' ';
    out << "\"/>\n";
    const double ly = kTop + 14 + 16.0 * i;
    out << "<line x1=\"" << kLeft + pw + 12 << "\" y1=\"" << ly - 4 << "\" x2=\"" << kLeft + pw + 32
        << "\" y2=\"" << ly - 4 << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n"
        << "<text x=\"" << kLeft + pw + 36 << "\" y=\"" << ly << "\">" << xml_escape(series[i].name)
        << "</text>\n";
  }
  out << "</svg>\n";
}

std::vector<PlotSeries> exp_a_plot_series(const std::vector<ExpARow>& rows) {
  std::vector<PlotSeries> out;
  for (const ExpARow& r : rows) {
    if (r.trial != 1 || r.image.front() != 'b') continue;
    const std::string name = std::string(backend_name(r.backend)) + " " + std::string(exp_a_op_name(r.op));
    auto it = std::find_if(out.begin(), out.end(), [&](const PlotSeries& s) { return s.name == name; });
    if (it == out.end()) it = out.insert(out.end(), PlotSeries{name, {}});
    it->points.emplace_back(static_cast<double>(r.size.area()), r.virtual_ms);
  }
  return out;
}

std::vector<PlotSeries> exp_b_plot_series(const std::vector<ExpBResult>& rows) {
  std::vector<PlotSeries> out;
  for (const ExpBResult& r : rows) {
    const std::string name = std::string(backend_name(r.backend)) + (r.inverted ? " invert" : " none");
    auto it = std::find_if(out.begin(), out.end(), [&](const PlotSeries& s) { return s.name == name; });
    if (it == out.end()) it = out.insert(out.end(), PlotSeries{name, {}});
    it->points.emplace_back(static_cast<double>(r.size.area()), r.delta_ms);
  }
  return out;
}

std::vector<PlotSeries> exp_c_plot_series(const std::vector<ExpCResult>& runs) {
  std::vector<PlotSeries> out;
  for (const ExpCResult& run : runs) {
    PlotSeries s{std::string(backend_name(run.backend)), {}};
    for (const ExpCProbe& p : run.probes) s.points.emplace_back(p.count, p.probe_ms);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace photocomp
