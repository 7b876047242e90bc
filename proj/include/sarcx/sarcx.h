/* C interface to the sarcx statistical-complexity library.
 *
 * Objects are opaque handles created by sarcx_*_create/read/compute calls and
 * released with the matching *_free. Every fallible call returns a
 * sarcx_status; on failure a message is available from sarcx_last_error()
 * on the calling thread until the next failing call on that thread.
 */
#ifndef SARCX_SARCX_H
#define SARCX_SARCX_H

#include <stddef.h>
#include <stdint.h>

#if defined(SARCX_BUILDING_LIBRARY)
#define SARCX_API __attribute__((visibility("default")))
#else
#define SARCX_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sarcx_status {
  SARCX_OK = 0,
  SARCX_ERR_INVALID_ARGUMENT = 1,
  SARCX_ERR_IO = 2,
  SARCX_ERR_FORMAT = 3,
  SARCX_ERR_PARSE = 4,
  SARCX_ERR_INVALID_SPEC = 5,
  SARCX_ERR_DEGENERATE = 6,
  SARCX_ERR_NUMERIC = 7,
  SARCX_ERR_INTERNAL = 8
} sarcx_status;

typedef enum sarcx_layer {
  SARCX_LAYER_ENTROPY = 0,
  SARCX_LAYER_DISTANCE = 1,
  SARCX_LAYER_COMPLEXITY = 2
} sarcx_layer;

/* Mirrors the per-pixel status codes stored in a map. */
typedef enum sarcx_pixel_status {
  SARCX_PIXEL_NOT_COMPUTED = 0,
  SARCX_PIXEL_CONVERGED = 1,
  SARCX_PIXEL_BOUNDARY_CLAMPED = 2,
  SARCX_PIXEL_FIT_FAILED = 3,
  SARCX_PIXEL_QUADRATURE_FAILED = 4,
  SARCX_PIXEL_NODATA = 5
} sarcx_pixel_status;

typedef struct sarcx_raster sarcx_raster;
typedef struct sarcx_maps sarcx_maps;

typedef struct sarcx_map_config {
  double looks;          /* >= 1 */
  size_t window;         /* odd, >= 3 */
  size_t stride;         /* >= 1 */
  double abs_tol;        /* quadrature, > 0 */
  double rel_tol;        /* quadrature, > 0 */
  size_t max_subdivisions;
  size_t workers;        /* 0 = hardware concurrency; never changes results */
  size_t max_iterations; /* simplex iterations per pixel */
  double simplex_tol;    /* simplex diameter for convergence */
  double alpha_min;      /* roughness clamp, alpha_min < alpha_max < -1 */
  double alpha_max;
} sarcx_map_config;

typedef struct sarcx_map_counts {
  size_t total;
  size_t valid;
  size_t by_status[6]; /* indexed by sarcx_pixel_status */
} sarcx_map_counts;

typedef struct sarcx_pixel_result {
  int valid;
  sarcx_pixel_status status;
  double entropy;
  double distance;
  double complexity;
} sarcx_pixel_result;

SARCX_API const char* sarcx_version(void);
SARCX_API const char* sarcx_last_error(void);
SARCX_API const char* sarcx_status_name(sarcx_status status);

/* Defaults: looks 3, window 11, stride 1, abs_tol 1e-8, rel_tol 1e-6,
 * 200 subdivisions, 1 worker, 500 iterations, simplex_tol 1e-6,
 * alpha in [-50, -1.01]. */
SARCX_API void sarcx_map_config_default(sarcx_map_config* cfg);

/* format is "flat-f32", "flat-f64" or "pgm16". */
SARCX_API sarcx_status sarcx_raster_read(const char* path, const char* format,
                                         sarcx_raster** out);
SARCX_API sarcx_status sarcx_raster_create(size_t width, size_t height,
                                           const double* values, sarcx_raster** out);
SARCX_API sarcx_status sarcx_raster_write(const sarcx_raster* raster, const char* path,
                                          const char* format);
SARCX_API sarcx_status sarcx_raster_size(const sarcx_raster* raster, size_t* width,
                                         size_t* height);
/* Borrowed pointer, valid until the raster is freed. */
SARCX_API sarcx_status sarcx_raster_data(const sarcx_raster* raster, const double** data);
SARCX_API void sarcx_raster_free(sarcx_raster* raster);

/* Builds a phantom from a JSON scene description. When override_seed is
 * non-zero, seed replaces the document's seed. labels receives region
 * indices (0 background, k+1 region k) and may be NULL. */
SARCX_API sarcx_status sarcx_phantom_generate(const char* json_text, int override_seed,
                                              uint64_t seed, sarcx_raster** image,
                                              sarcx_raster** labels);

SARCX_API sarcx_status sarcx_compute_map(const sarcx_raster* image,
                                         const sarcx_map_config* cfg, sarcx_maps** out);
SARCX_API sarcx_status sarcx_maps_size(const sarcx_maps* maps, size_t* width,
                                       size_t* height);
SARCX_API sarcx_status sarcx_maps_counts(const sarcx_maps* maps, sarcx_map_counts* counts);
/* Borrowed pointers into the map; NaN marks invalid pixels. */
SARCX_API sarcx_status sarcx_maps_layer(const sarcx_maps* maps, sarcx_layer layer,
                                        const double** data);
SARCX_API sarcx_status sarcx_maps_mask(const sarcx_maps* maps, const uint8_t** mask);
SARCX_API sarcx_status sarcx_maps_status(const sarcx_maps* maps, const uint8_t** status);
/* flat-f64 + sidecar. */
SARCX_API sarcx_status sarcx_maps_write_layer(const sarcx_maps* maps, sarcx_layer layer,
                                              const char* path);
/* 8-bit grayscale PNG with a 2%/98% quantile stretch. */
SARCX_API sarcx_status sarcx_maps_write_png(const sarcx_maps* maps, sarcx_layer layer,
                                            const char* path);
/* P5 graymap with maxval 1. */
SARCX_API sarcx_status sarcx_maps_write_mask(const sarcx_maps* maps, const char* path);
SARCX_API void sarcx_maps_free(sarcx_maps* maps);

/* Single window of n positive values (n >= 9). */
SARCX_API sarcx_status sarcx_compute_pixel(const double* window, size_t n, double looks,
                                           double abs_tol, double rel_tol,
                                           sarcx_pixel_result* out);

#ifdef __cplusplus
}
#endif

#endif /* SARCX_SARCX_H */
