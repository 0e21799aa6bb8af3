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

// photocomp command line: batch effects, scene rendering, the processing
// service and the three benchmark experiments.

#include <csignal>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "photocomp/backend.h"
#include "photocomp/effects.h"
#include "photocomp/failover.h"
#include "photocomp/harness.h"
#include "photocomp/image_store.h"
#include "photocomp/ppm.h"
#include "photocomp/scene.h"

namespace fs = std::filesystem;
using namespace photocomp;

namespace {

std::vector<std::uint8_t> read_bytes(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_bytes(const fs::path& path, const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

fs::path alpha_sidecar(fs::path ppm) { return ppm.replace_extension(".alpha.pgm"); }

RasterImage load_with_alpha(const fs::path& path) {
  RasterImage image = load_ppm(path);
  if (const fs::path side = alpha_sidecar(path); fs::exists(side)) apply_alpha_pgm(read_bytes(side), image);
  return image;
}

// PPM has no alpha; a non-opaque result also gets a P5 alpha sidecar.
void save_with_alpha(const RasterImage& image, const fs::path& path) {
  save_ppm(image, path);
  if (!is_opaque(image)) {
    write_bytes(alpha_sidecar(path), encode_alpha_pgm(image));
    std::cerr << "alpha plane written to " << alpha_sidecar(path).string() << "\n";
  }
}

double parse_throughput(const std::string& text) {
  if (text == "inf" || text == "infinity") return CostModel::kInfiniteThroughput;
  std::size_t used = 0;
  const double v = std::stod(text, &used);
  if (used != text.size() || !(v > 0.0)) throw CLI::ValidationError("--throughput", "must be > 0 or 'inf'");
  return v;
}

std::vector<BackendKind> parse_backends(const std::string& text) {
  if (text == "all") return {std::begin(kAllBackends), std::end(kAllBackends)};
  const auto kind = backend_from_name(text);
  if (!kind) throw CLI::ValidationError("--backend", "expected raster, scenegraph, legacy or all");
  return {*kind};
}

ScreenSpec parse_screen_flag(const std::string& text) {
  const auto screen = parse_screen(text);
  if (!screen) throw CLI::ValidationError("--screen", "expected WxH, e.g. 1920x1200");
  return *screen;
}

// Output goes to a file when a path is given, stdout otherwise.
template <typename Writer>
void emit(const std::string& path, Writer&& write) {
  if (path.empty() || path == "-") {
    write(std::cout);
    return;
  }
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  write(out);
}

struct HarnessFlags {
  std::string backend = "all";
  std::uint64_t seed = 1;
  std::string throughput = "1000";
  double quantize = 0.0;
  double latency = 50.0;
  std::string csv;
  std::string plot;
  std::string screen = "1920x1200";
  std::string images;
};

void add_harness_flags(CLI::App* cmd, HarnessFlags& f) {
  cmd->add_option("--backend", f.backend, "raster, scenegraph, legacy or all")->capture_default_str();
  cmd->add_option("--seed", f.seed, "Seed for randomized placements")->capture_default_str();
  cmd->add_option("--throughput", f.throughput, "Pixels per virtual ms, or inf")->capture_default_str();
  cmd->add_option("--quantize-clock", f.quantize, "Timer resolution in ms (0 = exact)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--latency", f.latency, "Virtual ms per remote effect call")->capture_default_str();
  cmd->add_option("--csv", f.csv, "CSV output path (default stdout)");
  cmd->add_option("--plot", f.plot, "SVG plot output path");
  cmd->add_option("--screen", f.screen, "Screen size WxH")->capture_default_str();
  cmd->add_option("--images", f.images, "Directory of b/f source PPMs (default: generated)");
}

struct HarnessSetup {
  HarnessConfig config;
  std::unique_ptr<ImageStore> store;
};

HarnessSetup make_setup(const HarnessFlags& f) {
  HarnessSetup s;
  s.config.screen = parse_screen_flag(f.screen);
  s.config.seed = f.seed;
  s.config.model.throughput = parse_throughput(f.throughput);
  s.config.model.remote_latency_ms = f.latency;
  if (f.quantize > 0.0) s.config.quantize_ms = f.quantize;
  if (!f.images.empty()) {
    if (!fs::is_directory(f.images)) throw std::runtime_error("no image directory " + f.images);
    s.store = std::make_unique<ImageStore>(f.images);
    s.config.images = s.store.get();
  }
  return s;
}

// --- effects apply ---------------------------------------------------------

int run_effects_apply(const std::string& op, const std::vector<std::string>& params,
                      const std::string& in, const std::string& out) {
  std::vector<std::pair<std::string, std::string>> kv;
  for (const std::string& p : params) {
    const auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) throw EffectParamError("--param expects k=v, got '" + p + "'");
    kv.emplace_back(p.substr(0, eq), p.substr(eq + 1));
  }
  const EffectSpec spec = effect_from_params(op, kv);
  save_with_alpha(apply_effect(load_with_alpha(in), spec), out);
  return 0;
}

// --- render ----------------------------------------------------------------

struct RenderFlags {
  std::string scene;
  std::string backend = "raster";
  std::string screen = "1024x768";
  std::string out;
  std::string cost;
  std::string service;
  std::string throughput = "1000";
};

int run_render(const RenderFlags& f) {
  const auto kind = backend_from_name(f.backend);
  if (!kind) throw CLI::ValidationError("--backend", "expected raster, scenegraph or legacy");
  const ScreenSpec screen = parse_screen_flag(f.screen);

  const fs::path scene_path(f.scene);
  std::ifstream in(scene_path);
  if (!in) throw std::runtime_error("cannot open " + f.scene);
  std::stringstream text;
  text << in.rdbuf();

  // Sources are paths relative to the scene file; they are registered in an
  // in-memory store under generated keys.
  ImageStore images;
  std::map<std::string, std::string, std::less<>> key_of;
  const SourceSizeResolver resolve = [&](std::string_view source) -> Size {
    auto it = key_of.find(source);
    if (it == key_of.end()) {
      fs::path path = scene_path.parent_path() / std::string(source);
      if (!fs::exists(path) && fs::exists(fs::path(path).concat(".ppm"))) path.concat(".ppm");
      const std::string key = "src" + std::to_string(key_of.size());
      images.put(key, load_with_alpha(path));
      it = key_of.emplace(std::string(source), key).first;
    }
    return *images.size_of(it->second);
  };
  SceneDocument scene = scene_load(text.str(), resolve);
  for (const PhotoObject* p : scene.draw_order()) {
    PhotoObject copy = *p;
    copy.source = key_of.at(p->source);
    scene.replace(std::move(copy));
  }

  ProcessingService service;
  std::unique_ptr<Transport> transport;
  if (f.service.empty()) {
    transport = std::make_unique<LocalTransport>(service);
  } else {
    const auto colon = f.service.rfind(':');
    if (colon == std::string::npos) throw CLI::ValidationError("--service", "expected host:port");
    transport = std::make_unique<HttpTransport>(f.service.substr(0, colon),
                                                std::stoi(f.service.substr(colon + 1)));
  }
  FailoverClient failover(*transport);

  BackendOptions options;
  options.images = &images;
  options.failover = &failover;
  options.produce_pixels = true;
  auto backend = RenderBackend::create(*kind, screen, options);
  const RenderResult result = backend->render_full(scene);
  save_ppm(result.frame->to_image(), f.out);

  if (!f.cost.empty()) {
    CostModel model;
    model.throughput = parse_throughput(f.throughput);
    const CostReport& c = result.cost;
    emit(f.cost, [&](std::ostream& os) {
      os << "backend,work_units,clear_px,draw_px,effect_px,remote_calls,virtual_ms,frames\n"
         << backend_name(*kind) << ',' << c.work_units() << ',' << c.clear_px << ',' << c.draw_px
         << ',' << c.effect_px << ',' << c.remote_calls << ',' << c.virtual_ms(model) << ','
         << c.frames << '\n';
    });
  }
  return 0;
}

// --- serve -----------------------------------------------------------------

HttpServer* g_server = nullptr;

void on_signal(int) {
  if (g_server) g_server->stop();
}

int run_serve(const std::string& host, int port, const std::string& store_dir) {
  auto store = store_dir.empty() ? std::make_shared<ImageStore>()
                                 : std::make_shared<ImageStore>(fs::path(store_dir));
  ProcessingService service(store);
  HttpServer server(service);
  const int bound = server.bind(host, port);
  if (bound < 0) {
    std::cerr << "cannot bind " << host << ":" << port << "\n";
    return 1;
  }
  g_server = &server;
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  std::cout << "listening on http://" << host << ":" << bound << "/api" << std::endl;
  const bool ok = server.listen();
  g_server = nullptr;
  return ok ? 0 : 1;
}

// --- experiments -----------------------------------------------------------

int run_exp_a(const HarnessFlags& f) {
  const HarnessSetup s = make_setup(f);
  const auto rows = exp_a_run(parse_backends(f.backend), s.config);
  emit(f.csv, [&](std::ostream& os) { write_exp_a_csv(os, rows); });
  if (!f.plot.empty()) {
    emit(f.plot, [&](std::ostream& os) {
      write_svg_plot(os, "Application time by photo size", "photo pixels", "virtual ms",
                     exp_a_plot_series(rows));
    });
  }
  return 0;
}

int run_exp_b(const HarnessFlags& f) {
  const HarnessSetup s = make_setup(f);
  const auto rows = exp_b_sweep(parse_backends(f.backend), s.config);
  emit(f.csv, [&](std::ostream& os) { write_exp_b_csv(os, rows); });
  if (!f.plot.empty()) {
    emit(f.plot, [&](std::ostream& os) {
      write_svg_plot(os, "Drag completion delay", "photo pixels", "delta ms",
                     exp_b_plot_series(rows));
    });
  }
  return 0;
}

int run_exp_c(const HarnessFlags& f, int max_photos) {
  const HarnessSetup s = make_setup(f);
  StopRules rules;
  rules.max_photos = max_photos;
  std::vector<ExpCResult> runs;
  for (BackendKind kind : parse_backends(f.backend)) runs.push_back(exp_c_run(kind, s.config, rules));
  emit(f.csv, [&](std::ostream& os) { write_exp_c_csv(os, runs); });
  if (!f.plot.empty()) {
    emit(f.plot, [&](std::ostream& os) {
      write_svg_plot(os, "Probe rotation time under load", "photos loaded", "virtual ms",
                     exp_c_plot_series(runs));
    });
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"photocomp: photo composition engine and benchmark harness"};
  app.require_subcommand(1);

  auto* effects = app.add_subcommand("effects", "Image effects");
  effects->require_subcommand(1);
  auto* apply = effects->add_subcommand("apply", "Apply one effect to a PPM file");
  std::string op, in, out;
  std::vector<std::string> params;
  apply->add_option("--op", op, "Effect kind, e.g. sepia")->required();
  apply->add_option("--param", params, "Parameter k=v (repeatable)")->take_all();
  apply->add_option("--in", in, "Input PPM")->required()->check(CLI::ExistingFile);
  apply->add_option("--out", out, "Output PPM")->required();

  RenderFlags rf;
  auto* render = app.add_subcommand("render", "Render a scene document to a PPM frame");
  render->add_option("--scene", rf.scene, "Scene JSON")->required()->check(CLI::ExistingFile);
  render->add_option("--backend", rf.backend, "raster, scenegraph or legacy")->capture_default_str();
  render->add_option("--screen", rf.screen, "Screen size WxH")->capture_default_str();
  render->add_option("--out", rf.out, "Output PPM")->required();
  render->add_option("--cost", rf.cost, "Cost report CSV");
  render->add_option("--service", rf.service, "host:port of a processing service (default in-process)");
  render->add_option("--throughput", rf.throughput, "Pixels per virtual ms for --cost")->capture_default_str();

  std::string host = "127.0.0.1", store_dir;
  int port = 8080;
  auto* serve = app.add_subcommand("serve", "Run the processing service (POST /api)");
  serve->add_option("--port", port, "TCP port (0 picks a free one)")->capture_default_str();
  serve->add_option("--host", host, "Bind address")->capture_default_str();
  serve->add_option("--store", store_dir, "Directory backing put_image and keyed images");

  HarnessFlags fa, fb, fc;
  int max_photos = 100;
  auto* exp_a = app.add_subcommand("exp-a", "Application time of single operations");
  add_harness_flags(exp_a, fa);
  auto* exp_b = app.add_subcommand("exp-b", "Scripted drag replay");
  add_harness_flags(exp_b, fb);
  auto* exp_c = app.add_subcommand("exp-c", "Load simulation with stop rules");
  add_harness_flags(exp_c, fc);
  exp_c->add_option("--max-photos", max_photos, "Photo limit")->capture_default_str()->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (apply->parsed()) return run_effects_apply(op, params, in, out);
    if (render->parsed()) return run_render(rf);
    if (serve->parsed()) return run_serve(host, port, store_dir);
    if (exp_a->parsed()) return run_exp_a(fa);
    if (exp_b->parsed()) return run_exp_b(fb);
    if (exp_c->parsed()) return run_exp_c(fc, max_photos);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
