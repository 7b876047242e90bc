// sarcx: statistical complexity maps of intensity SAR images.
//
//   sarcx complexity --input img.f64 --format flat-f64 --out results/
//   sarcx phantom --spec scene.json --out scene.f64

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sarcx/sarcx.h"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kBadConfig = 2,
  kBadInput = 3,
  kNoValidOutput = 4,
  kInvalidSpec = 5,
  kOutputError = 6,
};

int report(int code, const std::string& what) {
  std::cerr << "sarcx: " << what << "\n";
  return code;
}

int report_status(int code, sarcx_status s, const std::string& context) {
  return report(code, context + ": " + sarcx_status_name(s) + ": " + sarcx_last_error());
}

struct ComplexityOptions {
  std::string input;
  std::string format = "flat-f64";
  std::string out;
  std::string emit = "H,D,C,mask,png";
  sarcx_map_config cfg{};
};

struct PhantomOptions {
  std::string spec;
  std::string out;
  std::string format = "flat-f64";
  bool has_seed = false;
  std::uint64_t seed = 0;
};

// Owns a C handle.
template <class T, void (*Free)(T*)>
struct Handle {
  T* ptr = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Free(ptr); }
};
using RasterHandle = Handle<sarcx_raster, sarcx_raster_free>;
using MapsHandle = Handle<sarcx_maps, sarcx_maps_free>;

const char* kStatusNames[] = {"not_computed", "converged",         "boundary_clamped",
                              "fit_failed",   "quadrature_failed", "nodata"};

std::set<std::string> parse_emit(const std::string& list, std::string& bad) {
  static const std::set<std::string> known = {"H", "D", "C", "mask", "png"};
  std::set<std::string> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (!known.count(item)) bad = item;
    out.insert(item);
  }
  return out;
}

std::string validate(const sarcx_map_config& c) {
  if (!(c.looks >= 1.0)) return "--looks must be >= 1";
  if (c.window < 3 || c.window % 2 == 0) return "--window must be odd and >= 3";
  if (c.stride < 1) return "--stride must be >= 1";
  if (!(c.abs_tol > 0.0) || !(c.rel_tol > 0.0)) return "tolerances must be > 0";
  if (c.max_subdivisions < 1) return "--max-subdivisions must be >= 1";
  return {};
}

int run_complexity(const ComplexityOptions& opt) {
  const auto started = std::chrono::steady_clock::now();
  if (const std::string err = validate(opt.cfg); !err.empty()) return report(kBadConfig, err);
  std::string bad_emit;
  const auto emit = parse_emit(opt.emit, bad_emit);
  if (!bad_emit.empty()) return report(kBadConfig, "unknown --emit item '" + bad_emit + "'");

  RasterHandle image;
  if (auto s = sarcx_raster_read(opt.input.c_str(), opt.format.c_str(), &image.ptr);
      s != SARCX_OK) {
    return report_status(s == SARCX_ERR_INVALID_ARGUMENT ? kBadConfig : kBadInput, s,
                         "reading " + opt.input);
  }
  std::size_t width = 0;
  std::size_t height = 0;
  sarcx_raster_size(image.ptr, &width, &height);
  if (width < opt.cfg.window || height < opt.cfg.window) {
    return report(kBadConfig, "window " + std::to_string(opt.cfg.window) +
                                  " does not fit a " + std::to_string(width) + "x" +
                                  std::to_string(height) + " image");
  }

  MapsHandle maps;
  if (auto s = sarcx_compute_map(image.ptr, &opt.cfg, &maps.ptr); s != SARCX_OK) {
    return report_status(s == SARCX_ERR_INVALID_ARGUMENT ? kBadConfig : kInternal, s,
                         "computing maps");
  }
  sarcx_map_counts counts{};
  sarcx_maps_counts(maps.ptr, &counts);

  std::error_code ec;
  fs::create_directories(opt.out, ec);
  if (ec) return report(kOutputError, "cannot create " + opt.out + ": " + ec.message());
  const fs::path dir(opt.out);

  std::vector<std::string> outputs;
  const std::pair<const char*, sarcx_layer> layers[] = {{"H", SARCX_LAYER_ENTROPY},
                                                        {"D", SARCX_LAYER_DISTANCE},
                                                        {"C", SARCX_LAYER_COMPLEXITY}};
  for (const auto& [name, layer] : layers) {
    if (emit.count(name)) {
      const fs::path p = dir / (std::string(name) + ".f64");
      if (auto s = sarcx_maps_write_layer(maps.ptr, layer, p.c_str()); s != SARCX_OK) {
        return report_status(kOutputError, s, "writing " + p.string());
      }
      outputs.push_back(p.filename().string());
      outputs.push_back(p.filename().string() + ".json");
    }
    if (emit.count("png")) {
      const fs::path p = dir / (std::string(name) + ".png");
      if (auto s = sarcx_maps_write_png(maps.ptr, layer, p.c_str()); s != SARCX_OK) {
        return report_status(kOutputError, s, "writing " + p.string());
      }
      outputs.push_back(p.filename().string());
    }
  }
  if (emit.count("mask")) {
    const fs::path p = dir / "mask.pgm";
    if (auto s = sarcx_maps_write_mask(maps.ptr, p.c_str()); s != SARCX_OK) {
      return report_status(kOutputError, s, "writing " + p.string());
    }
    outputs.push_back(p.filename().string());
  }

  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  json status_counts = json::object();
  for (std::size_t i = 0; i < 6; ++i) status_counts[kStatusNames[i]] = counts.by_status[i];
  const json manifest = {
      {"tool", "sarcx"},
      {"version", sarcx_version()},
      {"command", "complexity"},
      {"input", {{"path", opt.input}, {"format", opt.format}, {"width", width},
                 {"height", height}}},
      {"config",
       {{"looks", opt.cfg.looks},
        {"window", opt.cfg.window},
        {"stride", opt.cfg.stride},
        {"border", "skip"},
        {"abs_tol", opt.cfg.abs_tol},
        {"rel_tol", opt.cfg.rel_tol},
        {"max_subdivisions", opt.cfg.max_subdivisions},
        {"max_iterations", opt.cfg.max_iterations},
        {"simplex_tol", opt.cfg.simplex_tol},
        {"alpha_min", opt.cfg.alpha_min},
        {"alpha_max", opt.cfg.alpha_max},
        {"workers", opt.cfg.workers},
        {"emit", std::vector<std::string>(emit.begin(), emit.end())}}},
      {"counts", {{"total", counts.total}, {"valid", counts.valid}, {"status", status_counts}}},
      {"outputs", outputs},
      {"wall_time_seconds", wall},
  };
  const fs::path manifest_path = dir / "manifest.json";
  std::ofstream mout(manifest_path);
  mout << manifest.dump(2) << "\n";
  if (!mout) return report(kOutputError, "writing " + manifest_path.string());

  if (counts.valid == 0) return report(kNoValidOutput, "no valid pixels in output");
  std::cout << "valid pixels: " << counts.valid << " of " << counts.total << "\n";
  return kOk;
}

int run_phantom(const PhantomOptions& opt) {
  std::ifstream in(opt.spec);
  if (!in) return report(kBadInput, "cannot read phantom spec " + opt.spec);
  std::stringstream text;
  text << in.rdbuf();

  RasterHandle image;
  RasterHandle labels;
  const auto s = sarcx_phantom_generate(text.str().c_str(), opt.has_seed ? 1 : 0, opt.seed,
                                        &image.ptr, &labels.ptr);
  if (s == SARCX_ERR_PARSE) return report_status(kBadInput, s, opt.spec);
  if (s == SARCX_ERR_INVALID_SPEC) return report_status(kInvalidSpec, s, opt.spec);
  if (s != SARCX_OK) return report_status(kInternal, s, opt.spec);

  if (auto w = sarcx_raster_write(image.ptr, opt.out.c_str(), opt.format.c_str());
      w != SARCX_OK) {
    return report_status(w == SARCX_ERR_INVALID_ARGUMENT ? kBadConfig : kOutputError, w,
                         "writing " + opt.out);
  }
  const std::string label_path = opt.out + ".labels.pgm";
  if (auto w = sarcx_raster_write(labels.ptr, label_path.c_str(), "pgm16"); w != SARCX_OK) {
    return report_status(kOutputError, w, "writing " + label_path);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Statistical complexity maps of intensity SAR images"};
  app.set_version_flag("--version", std::string(sarcx_version()));
  app.require_subcommand(1);

  ComplexityOptions copt;
  sarcx_map_config_default(&copt.cfg);
  auto* cx = app.add_subcommand("complexity", "Compute entropy, distance and complexity maps");
  cx->add_option("--input", copt.input, "Input raster")->required();
  cx->add_option("--format", copt.format, "flat-f32 | flat-f64 | pgm16")
      ->capture_default_str();
  cx->add_option("--looks", copt.cfg.looks, "Number of looks L")->capture_default_str();
  cx->add_option("--window", copt.cfg.window, "Odd window side")->capture_default_str();
  cx->add_option("--stride", copt.cfg.stride, "Lattice stride")->capture_default_str();
  cx->add_option("--abs-tol", copt.cfg.abs_tol, "Quadrature absolute tolerance")
      ->capture_default_str();
  cx->add_option("--rel-tol", copt.cfg.rel_tol, "Quadrature relative tolerance")
      ->capture_default_str();
  cx->add_option("--max-subdivisions", copt.cfg.max_subdivisions, "Quadrature budget")
      ->capture_default_str();
  cx->add_option("--out", copt.out, "Output directory")->required();
  cx->add_option("--emit", copt.emit, "Comma list of H,D,C,mask,png")->capture_default_str();
  cx->add_option("--workers", copt.cfg.workers, "Worker threads (0 = all cores)")
      ->capture_default_str();

  PhantomOptions popt;
  auto* ph = app.add_subcommand("phantom", "Generate a synthetic speckled scene");
  ph->add_option("--spec", popt.spec, "Phantom JSON description")->required();
  ph->add_option("--out", popt.out, "Output raster path")->required();
  ph->add_option("--format", popt.format, "flat-f32 | flat-f64")->capture_default_str();
  ph->add_option("--seed", popt.seed, "Override the spec's seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kBadConfig;
  }
  popt.has_seed = ph->count("--seed") > 0;

  try {
    if (*cx) return run_complexity(copt);
    if (*ph) return run_phantom(popt);
  } catch (const std::exception& e) {
    return report(kInternal, e.what());
  }
  return kBadConfig;
}
