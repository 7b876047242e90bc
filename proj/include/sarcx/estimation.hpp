#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "sarcx/models.hpp"

namespace sarcx {

// Smallest window (3x3) accepted by the G0 fits.
inline constexpr std::size_t kMinG0Window = 9;

struct OptimizerSettings {
  std::size_t max_iterations = 500;
  // Simplex diameter in the (log(-alpha-1), log gamma) plane.
  double tolerance = 1e-6;
  double alpha_min = -50.0;
  double alpha_max = -1.01;
  double initial_step = 0.5;
};

enum class FitStatus { Converged, BoundaryClamped, Failed };

const char* to_string(FitStatus s);

struct EstimationResult {
  std::optional<G0Params> g0;  // present iff status != Failed
  GammaParams gamma;
  FitStatus status = FitStatus::Failed;
  std::size_t iterations = 0;
  std::optional<double> loglik;
};

// c = sequential arithmetic mean of the window. Throws Error(DegenerateWindow)
// when every value is zero, Error(InvalidArgument) on empty/negative input.
GammaParams fit_gamma(std::span<const double> window, double looks);

// Σ g0_log_pdf(p, z_i), summed in window order.
double g0_loglik(const G0Params& p, std::span<const double> window);

// Solves the first two moment equations of G0 for (alpha, gamma) given L.
// Empty when the dispersion is at or below that of Γ(L), where no alpha < -2
// reproduces it. The returned alpha is at most -1.05.
std::optional<G0Params> fit_g0_moments(std::span<const double> window, double looks);

// Maximum-likelihood G0 fit by a projected Nelder-Mead search over
// alpha = -1 - exp(a), gamma = exp(g), started from fit_g0_moments (or
// alpha = -3, gamma = 2·mean). Windows without dispersion yield Failed.
// Throws Error(InvalidArgument) for fewer than kMinG0Window values or any
// value <= 0.
EstimationResult fit_g0_ml(std::span<const double> window, double looks,
                           const OptimizerSettings& opts = {});

}  // namespace sarcx
