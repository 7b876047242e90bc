#include "sarcx/complexity_map.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>
#include <vector>

#include "sarcx/error.hpp"
#include "sarcx/info_measures.hpp"

namespace sarcx {

void WindowConfig::validate() const {
  if (side < 3 || side % 2 == 0) {
    throw Error(ErrorCode::InvalidArgument, "window side must be odd and >= 3");
  }
  if (stride < 1) throw Error(ErrorCode::InvalidArgument, "stride must be >= 1");
}

const char* to_string(PixelStatus s) {
  switch (s) {
    case PixelStatus::NotComputed: return "not_computed";
    case PixelStatus::Converged: return "converged";
    case PixelStatus::BoundaryClamped: return "boundary_clamped";
    case PixelStatus::FitFailed: return "fit_failed";
    case PixelStatus::QuadratureFailed: return "quadrature_failed";
    case PixelStatus::NoData: return "nodata";
  }
  return "unknown";
}

PixelOutcome compute_pixel(std::span<const double> window, double looks,
                           const QuadratureSpec& quad, const OptimizerSettings& opts) {
  EstimationResult fit{std::nullopt, GammaParams(1.0, 1.0), FitStatus::Failed, 0, std::nullopt};
  try {
    fit = fit_g0_ml(window, looks, opts);
  } catch (const Error&) {
    return {std::nullopt, PixelStatus::FitFailed};
  }
  if (fit.status == FitStatus::Failed || !fit.g0) return {std::nullopt, PixelStatus::FitFailed};

  PixelFeatures f{};
  try {
    f.entropy = shannon_entropy_g0(*fit.g0, quad);
    f.distance = hellinger_distance(SpeckleModel{*fit.g0}, SpeckleModel{fit.gamma}, quad);
  } catch (const Error&) {
    return {std::nullopt, PixelStatus::QuadratureFailed};
  }
  if (!std::isfinite(f.entropy) || !std::isfinite(f.distance)) {
    return {std::nullopt, PixelStatus::QuadratureFailed};
  }
  f.complexity = f.entropy * f.distance;
  return {f, fit.status == FitStatus::Converged ? PixelStatus::Converged
                                                : PixelStatus::BoundaryClamped};
}

std::array<std::size_t, kPixelStatusCount> FeatureMaps::status_counts() const {
  std::array<std::size_t, kPixelStatusCount> counts{};
  for (std::uint8_t s : status.data) ++counts[s];
  return counts;
}

std::size_t FeatureMaps::valid_count() const {
  return static_cast<std::size_t>(std::count(valid.data.begin(), valid.data.end(), 1));
}

namespace {

double smallest_positive(const Raster& img) {
  double m = std::numeric_limits<double>::infinity();
  for (double v : img.values()) {
    if (!img.is_nodata(v) && v > 0.0) m = std::min(m, v);
  }
  return m;
}

}  // namespace

FeatureMaps compute_map(const Raster& img, double looks, const WindowConfig& cfg,
                        const QuadratureSpec& quad, std::size_t workers,
                        const OptimizerSettings& opts) {
  cfg.validate();
  quad.validate();
  if (!(looks >= 1.0) || !std::isfinite(looks)) {
    throw Error(ErrorCode::InvalidArgument, "number of looks must be >= 1");
  }
  const std::size_t w = img.width();
  const std::size_t h = img.height();
  if (w < cfg.side || h < cfg.side) {
    throw Error(ErrorCode::InvalidArgument, "image is smaller than the window");
  }

  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  FeatureMaps maps{FloatMap(w, h, nan), FloatMap(w, h, nan), FloatMap(w, h, nan),
                   Mask(w, h, 0), Grid<std::uint8_t>(w, h, 0)};

  const std::size_t half = cfg.half();
  // A window containing only zeros stays all-zero after the lift and fails.
  const double floor_value = smallest_positive(img);

  std::vector<std::size_t> rows;
  for (std::size_t y = half; y + half < h; ++y) {
    if (y % cfg.stride == 0) rows.push_back(y);
  }

  auto process_row = [&](std::size_t y, std::vector<double>& window) {
    for (std::size_t x = half; x + half < w; ++x) {
      if (x % cfg.stride != 0) continue;
      window.clear();
      bool nodata = false;
      for (std::size_t wy = y - half; wy <= y + half && !nodata; ++wy) {
        for (std::size_t wx = x - half; wx <= x + half; ++wx) {
          const double v = img.at(wx, wy);
          if (img.is_nodata(v)) {
            nodata = true;
            break;
          }
          window.push_back(v > 0.0 ? v : floor_value);
        }
      }
      PixelOutcome out;
      if (nodata) {
        out.status = PixelStatus::NoData;
      } else if (!std::isfinite(floor_value)) {
        out.status = PixelStatus::FitFailed;
      } else {
        out = compute_pixel(window, looks, quad, opts);
      }
      maps.status.at(x, y) = static_cast<std::uint8_t>(out.status);
      if (out.features) {
        maps.entropy.at(x, y) = out.features->entropy;
        maps.distance.at(x, y) = out.features->distance;
        maps.complexity.at(x, y) = out.features->complexity;
        maps.valid.at(x, y) = 1;
      }
    }
  };

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, std::max<std::size_t>(rows.size(), 1));

  // Each row is owned by exactly one worker, so writes never overlap and the
  // per-pixel result does not depend on scheduling.
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    std::vector<double> window;
    window.reserve(cfg.side * cfg.side);
    for (std::size_t i = next.fetch_add(1); i < rows.size(); i = next.fetch_add(1)) {
      process_row(rows[i], window);
    }
  };
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(worker);
  }
  return maps;
}

}  // namespace sarcx
