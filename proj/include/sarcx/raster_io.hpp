#pragma once

#include <cstdint>
#include <filesystem>
#include <string_view>
#include <vector>

#include "sarcx/raster.hpp"

namespace sarcx {

enum class RasterFormat { FlatF32, FlatF64, Pgm };

// Accepts "flat-f32", "flat-f64", "pgm16" (and "pgm"). Throws InvalidArgument.
RasterFormat parse_raster_format(std::string_view name);
const char* to_string(RasterFormat f);

// Flat formats need a "<path>.json" sidecar with width, height, dtype
// ("float32"/"float64") and byte_order ("little"); an optional "nodata" may be
// a number or the string "nan". PGM (P5) samples are taken as-is, 8-bit when
// maxval < 256 and big-endian 16-bit otherwise.
Raster read_raster(const std::filesystem::path& path, RasterFormat format);

// Writes a raster as flat little-endian data plus sidecar.
void write_raster(const Raster& raster, const std::filesystem::path& path,
                  RasterFormat format = RasterFormat::FlatF64);

// Feature map as flat-f64 + sidecar with nodata "nan". Reads back
// bit-identically through read_raster.
void write_float_map(const FloatMap& map, const std::filesystem::path& path);

// P5 graymap. Values must be integers in [0, maxval], maxval in [1, 65535].
void write_pgm(const FloatMap& map, const std::filesystem::path& path, std::uint16_t maxval);
void write_mask(const Mask& mask, const std::filesystem::path& path);

// Linear stretch of the [lo_q, hi_q] quantiles of the finite values onto
// [0, 255]. NaN renders as 0; equal quantiles render every finite pixel 128.
std::vector<std::uint8_t> stretch_to_gray(const FloatMap& map, double lo_q = 0.02,
                                          double hi_q = 0.98);

// 8-bit grayscale PNG of stretch_to_gray(map).
void write_png_view(const FloatMap& map, const std::filesystem::path& path);

}  // namespace sarcx
