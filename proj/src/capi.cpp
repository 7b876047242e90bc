#include "sarcx/sarcx.h"

#include <cmath>
#include <exception>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "sarcx/complexity_map.hpp"
#include "sarcx/error.hpp"
#include "sarcx/phantom.hpp"
#include "sarcx/raster_io.hpp"
#include "sarcx/version.hpp"

struct sarcx_raster {
  sarcx::Raster raster;
};

struct sarcx_maps {
  sarcx::FeatureMaps maps;
};

namespace {

thread_local std::string last_error;

sarcx_status to_status(sarcx::ErrorCode code) {
  using sarcx::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return SARCX_ERR_INVALID_ARGUMENT;
    case ErrorCode::MeanUndefined: return SARCX_ERR_INVALID_ARGUMENT;
    case ErrorCode::DegenerateWindow: return SARCX_ERR_DEGENERATE;
    case ErrorCode::QuadratureNonConvergence: return SARCX_ERR_NUMERIC;
    case ErrorCode::Io: return SARCX_ERR_IO;
    case ErrorCode::Format: return SARCX_ERR_FORMAT;
    case ErrorCode::Parse: return SARCX_ERR_PARSE;
    case ErrorCode::InvalidSpec: return SARCX_ERR_INVALID_SPEC;
  }
  return SARCX_ERR_INTERNAL;
}

sarcx_status fail(sarcx_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs body and converts any exception into a status code.
template <class Body>
sarcx_status guarded(Body&& body) {
  try {
    body();
    return SARCX_OK;
  } catch (const sarcx::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(SARCX_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SARCX_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SARCX_ERR_INTERNAL, "unknown error");
  }
}

#define SARCX_REQUIRE(cond)                                                    \
  do {                                                                         \
    if (!(cond)) return fail(SARCX_ERR_INVALID_ARGUMENT, "null argument: " #cond); \
  } while (0)

const sarcx::FloatMap* layer_of(const sarcx_maps* m, sarcx_layer layer) {
  switch (layer) {
    case SARCX_LAYER_ENTROPY: return &m->maps.entropy;
    case SARCX_LAYER_DISTANCE: return &m->maps.distance;
    case SARCX_LAYER_COMPLEXITY: return &m->maps.complexity;
  }
  return nullptr;
}

}  // namespace

extern "C" {

const char* sarcx_version(void) { return sarcx::kVersion; }

const char* sarcx_last_error(void) { return last_error.c_str(); }

const char* sarcx_status_name(sarcx_status status) {
  switch (status) {
    case SARCX_OK: return "ok";
    case SARCX_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SARCX_ERR_IO: return "i/o error";
    case SARCX_ERR_FORMAT: return "format error";
    case SARCX_ERR_PARSE: return "parse error";
    case SARCX_ERR_INVALID_SPEC: return "invalid spec";
    case SARCX_ERR_DEGENERATE: return "degenerate input";
    case SARCX_ERR_NUMERIC: return "numerical failure";
    case SARCX_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void sarcx_map_config_default(sarcx_map_config* cfg) {
  if (!cfg) return;
  const sarcx::WindowConfig window;
  const sarcx::QuadratureSpec quad;
  cfg->looks = 3.0;
  cfg->window = window.side;
  cfg->stride = window.stride;
  cfg->abs_tol = quad.abs_tol;
  cfg->rel_tol = quad.rel_tol;
  cfg->max_subdivisions = quad.max_subdivisions;
  cfg->workers = 1;
  const sarcx::OptimizerSettings opts;
  cfg->max_iterations = opts.max_iterations;
  cfg->simplex_tol = opts.tolerance;
  cfg->alpha_min = opts.alpha_min;
  cfg->alpha_max = opts.alpha_max;
}

sarcx_status sarcx_raster_read(const char* path, const char* format, sarcx_raster** out) {
  SARCX_REQUIRE(path && format && out);
  *out = nullptr;
  return guarded([&] {
    auto raster = sarcx::read_raster(path, sarcx::parse_raster_format(format));
    *out = new sarcx_raster{std::move(raster)};
  });
}

sarcx_status sarcx_raster_create(size_t width, size_t height, const double* values,
                                 sarcx_raster** out) {
  SARCX_REQUIRE(values && out);
  *out = nullptr;
  return guarded([&] {
    std::vector<double> v(values, values + width * height);
    *out = new sarcx_raster{sarcx::Raster(width, height, std::move(v))};
  });
}

sarcx_status sarcx_raster_write(const sarcx_raster* raster, const char* path,
                                const char* format) {
  SARCX_REQUIRE(raster && path && format);
  return guarded([&] {
    sarcx::write_raster(raster->raster, path, sarcx::parse_raster_format(format));
  });
}

sarcx_status sarcx_raster_size(const sarcx_raster* raster, size_t* width, size_t* height) {
  SARCX_REQUIRE(raster && width && height);
  *width = raster->raster.width();
  *height = raster->raster.height();
  return SARCX_OK;
}

sarcx_status sarcx_raster_data(const sarcx_raster* raster, const double** data) {
  SARCX_REQUIRE(raster && data);
  *data = raster->raster.values().data();
  return SARCX_OK;
}

void sarcx_raster_free(sarcx_raster* raster) { delete raster; }

sarcx_status sarcx_phantom_generate(const char* json_text, int override_seed, uint64_t seed,
                                    sarcx_raster** image, sarcx_raster** labels) {
  SARCX_REQUIRE(json_text && image);
  *image = nullptr;
  if (labels) *labels = nullptr;
  return guarded([&] {
    sarcx::PhantomSpec spec = sarcx::parse_phantom_spec(json_text);
    if (override_seed) spec.seed = seed;
    sarcx::Phantom ph = sarcx::generate_phantom(spec);
    std::vector<double> label_values(ph.labels.data.begin(), ph.labels.data.end());
    auto img = std::make_unique<sarcx_raster>(sarcx_raster{std::move(ph.image)});
    if (labels) {
      *labels = new sarcx_raster{
          sarcx::Raster(ph.labels.width, ph.labels.height, std::move(label_values))};
    }
    *image = img.release();
  });
}

sarcx_status sarcx_compute_map(const sarcx_raster* image, const sarcx_map_config* cfg,
                               sarcx_maps** out) {
  SARCX_REQUIRE(image && cfg && out);
  *out = nullptr;
  return guarded([&] {
    sarcx::WindowConfig window;
    window.side = cfg->window;
    window.stride = cfg->stride;
    sarcx::QuadratureSpec quad{cfg->abs_tol, cfg->rel_tol, cfg->max_subdivisions};
    sarcx::OptimizerSettings opts;
    opts.max_iterations = cfg->max_iterations;
    opts.tolerance = cfg->simplex_tol;
    opts.alpha_min = cfg->alpha_min;
    opts.alpha_max = cfg->alpha_max;
    if (!(opts.tolerance > 0.0) || !(opts.alpha_min < opts.alpha_max) ||
        !(opts.alpha_max < -1.0)) {
      throw sarcx::Error(sarcx::ErrorCode::InvalidArgument, "invalid optimizer settings");
    }
    auto maps =
        sarcx::compute_map(image->raster, cfg->looks, window, quad, cfg->workers, opts);
    *out = new sarcx_maps{std::move(maps)};
  });
}

sarcx_status sarcx_maps_size(const sarcx_maps* maps, size_t* width, size_t* height) {
  SARCX_REQUIRE(maps && width && height);
  *width = maps->maps.entropy.width;
  *height = maps->maps.entropy.height;
  return SARCX_OK;
}

sarcx_status sarcx_maps_counts(const sarcx_maps* maps, sarcx_map_counts* counts) {
  SARCX_REQUIRE(maps && counts);
  const auto by_status = maps->maps.status_counts();
  counts->total = maps->maps.status.size();
  counts->valid = maps->maps.valid_count();
  for (std::size_t i = 0; i < by_status.size(); ++i) counts->by_status[i] = by_status[i];
  return SARCX_OK;
}

sarcx_status sarcx_maps_layer(const sarcx_maps* maps, sarcx_layer layer, const double** data) {
  SARCX_REQUIRE(maps && data);
  const auto* m = layer_of(maps, layer);
  if (!m) return fail(SARCX_ERR_INVALID_ARGUMENT, "unknown layer");
  *data = m->data.data();
  return SARCX_OK;
}

sarcx_status sarcx_maps_mask(const sarcx_maps* maps, const uint8_t** mask) {
  SARCX_REQUIRE(maps && mask);
  *mask = maps->maps.valid.data.data();
  return SARCX_OK;
}

sarcx_status sarcx_maps_status(const sarcx_maps* maps, const uint8_t** status) {
  SARCX_REQUIRE(maps && status);
  *status = maps->maps.status.data.data();
  return SARCX_OK;
}

sarcx_status sarcx_maps_write_layer(const sarcx_maps* maps, sarcx_layer layer,
                                    const char* path) {
  SARCX_REQUIRE(maps && path);
  const auto* m = layer_of(maps, layer);
  if (!m) return fail(SARCX_ERR_INVALID_ARGUMENT, "unknown layer");
  return guarded([&] { sarcx::write_float_map(*m, path); });
}

sarcx_status sarcx_maps_write_png(const sarcx_maps* maps, sarcx_layer layer,
                                  const char* path) {
  SARCX_REQUIRE(maps && path);
  const auto* m = layer_of(maps, layer);
  if (!m) return fail(SARCX_ERR_INVALID_ARGUMENT, "unknown layer");
  return guarded([&] { sarcx::write_png_view(*m, path); });
}

sarcx_status sarcx_maps_write_mask(const sarcx_maps* maps, const char* path) {
  SARCX_REQUIRE(maps && path);
  return guarded([&] { sarcx::write_mask(maps->maps.valid, path); });
}

void sarcx_maps_free(sarcx_maps* maps) { delete maps; }

sarcx_status sarcx_compute_pixel(const double* window, size_t n, double looks,
                                 double abs_tol, double rel_tol, sarcx_pixel_result* out) {
  SARCX_REQUIRE(window && out);
  return guarded([&] {
    if (n < sarcx::kMinG0Window) {
      throw sarcx::Error(sarcx::ErrorCode::InvalidArgument,
                         "window needs at least 9 values");
    }
    if (!(looks >= 1.0) || !std::isfinite(looks)) {
      throw sarcx::Error(sarcx::ErrorCode::InvalidArgument, "number of looks must be >= 1");
    }
    for (size_t i = 0; i < n; ++i) {
      if (!(window[i] > 0.0)) {
        throw sarcx::Error(sarcx::ErrorCode::InvalidArgument, "window values must be > 0");
      }
    }
    sarcx::QuadratureSpec quad{abs_tol, rel_tol, sarcx::QuadratureSpec{}.max_subdivisions};
    quad.validate();
    const auto r = sarcx::compute_pixel({window, n}, looks, quad);
    out->valid = r.features.has_value();
    out->status = static_cast<sarcx_pixel_status>(r.status);
    out->entropy = r.features ? r.features->entropy : 0.0;
    out->distance = r.features ? r.features->distance : 0.0;
    out->complexity = r.features ? r.features->complexity : 0.0;
  });
}

}  // extern "C"
