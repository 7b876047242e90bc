#pragma once

#include <functional>

#include "sarcx/models.hpp"
#include "sarcx/quadrature.hpp"

namespace sarcx {

// (h, φ)-entropy H = h(∫ φ(f)). Shannon is h(y) = y, φ(x) = -x ln x.
struct EntropySpec {
  enum class Kind { Shannon, Custom };
  Kind kind = Kind::Shannon;
  std::function<double(double)> h;
  std::function<double(double)> phi;

  static EntropySpec shannon();
  // Accepted as-is; the concavity/monotonicity conditions are the caller's.
  static EntropySpec custom(std::function<double(double)> h,
                            std::function<double(double)> phi);
};

// (h, φ)-divergence D = h(∫ φ(fX/fY) fY). Hellinger is h(y) = y/2,
// φ(x) = (√x - 1)², which equals 1 - ∫ √(fX fY).
struct DivergenceSpec {
  enum class Kind { Hellinger, Custom };
  Kind kind = Kind::Hellinger;
  std::function<double(double)> h;
  std::function<double(double)> phi;

  static DivergenceSpec hellinger();
  static DivergenceSpec custom(std::function<double(double)> h,
                               std::function<double(double)> phi);
};

double hphi_entropy(const SpeckleModel& m, const EntropySpec& spec,
                    const QuadratureSpec& quad = {});
double hphi_divergence(const SpeckleModel& x, const SpeckleModel& y,
                       const DivergenceSpec& spec, const QuadratureSpec& quad = {});

// -∫ f ln f over (0, ∞), integrating -f·log_pdf for stability.
double shannon_entropy(const SpeckleModel& m, const QuadratureSpec& quad = {});
double shannon_entropy_g0(const G0Params& p, const QuadratureSpec& quad = {});

// L - ln(L/c) + ln Γ(L) + (1 - L) ψ(L).
double shannon_entropy_gamma_closed(const GammaParams& p);

// 1 - ∫ √(fX fY), clamped to [0, 1].
double hellinger_distance(const SpeckleModel& x, const SpeckleModel& y,
                          const QuadratureSpec& quad = {});

}  // namespace sarcx
