#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

#include "sarcx/estimation.hpp"
#include "sarcx/quadrature.hpp"
#include "sarcx/raster.hpp"

namespace sarcx {

// Square vicinity: the window is centered on the pixel; only pixels whose
// full window lies inside the image are computed (no padding).
struct WindowConfig {
  enum class Border { SkipBorder };

  std::size_t side = 11;
  std::size_t stride = 1;
  Border border = Border::SkipBorder;

  // Throws Error(InvalidArgument) unless side is odd and >= 3, stride >= 1.
  void validate() const;
  std::size_t half() const { return side / 2; }
};

enum class PixelStatus : std::uint8_t {
  NotComputed = 0,  // border margin or off the stride lattice
  Converged,
  BoundaryClamped,
  FitFailed,
  QuadratureFailed,
  NoData,  // window touches a nodata pixel
};
inline constexpr std::size_t kPixelStatusCount = 6;

const char* to_string(PixelStatus s);

struct PixelFeatures {
  double entropy;
  double distance;
  double complexity;
};

struct PixelOutcome {
  std::optional<PixelFeatures> features;
  PixelStatus status = PixelStatus::FitFailed;
};

// H = Shannon entropy of the fitted G0, D = Hellinger distance between the
// fitted G0 and the fitted Gamma, C = H·D. Never throws on bad data: a
// failed fit or quadrature is reported through the status.
PixelOutcome compute_pixel(std::span<const double> window, double looks,
                           const QuadratureSpec& quad = {},
                           const OptimizerSettings& opts = {});

struct FeatureMaps {
  FloatMap entropy;
  FloatMap distance;
  FloatMap complexity;
  Mask valid;
  Grid<std::uint8_t> status;

  std::array<std::size_t, kPixelStatusCount> status_counts() const;
  std::size_t valid_count() const;
};

// Pixels are computed on the lattice x % stride == 0, y % stride == 0 where
// the window fits. Invalid pixels hold quiet NaN in the float maps. Output is
// bit-identical for every worker count (0 = hardware concurrency).
// Zero intensities are raised to the smallest positive value in the image.
FeatureMaps compute_map(const Raster& img, double looks, const WindowConfig& cfg,
                        const QuadratureSpec& quad = {}, std::size_t workers = 1,
                        const OptimizerSettings& opts = {});

}  // namespace sarcx
