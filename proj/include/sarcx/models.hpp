#pragma once

#include <cmath>
#include <variant>

namespace sarcx {

// Fully developed speckle: Gamma law with mean c and L looks, Γ(L, L/c).
class GammaParams {
 public:
  // Throws Error(InvalidArgument) unless mean > 0 and looks >= 1.
  GammaParams(double mean, double looks);

  double mean() const { return mean_; }
  double looks() const { return looks_; }

  friend bool operator==(const GammaParams&, const GammaParams&) = default;

 private:
  double mean_;
  double looks_;
};

// G0 intensity law with roughness alpha < 0, scale gamma > 0 and L looks.
class G0Params {
 public:
  // Throws Error(InvalidArgument) unless alpha < 0, gamma > 0, looks >= 1.
  G0Params(double alpha, double gamma, double looks);

  double alpha() const { return alpha_; }
  double gamma() const { return gamma_; }
  double looks() const { return looks_; }

  bool has_mean() const { return alpha_ < -1.0; }

  friend bool operator==(const G0Params&, const G0Params&) = default;

 private:
  double alpha_;
  double gamma_;
  double looks_;
};

using SpeckleModel = std::variant<GammaParams, G0Params>;

// Densities. Defined for z >= 0 using the continuous extension at z = 0.
double gamma_pdf(const GammaParams& p, double z);
double g0_pdf(const G0Params& p, double z);

// Log-densities, z > 0 only. Finite wherever the arguments are finite.
double gamma_log_pdf(const GammaParams& p, double z);
double g0_log_pdf(const G0Params& p, double z);

// gamma / (-alpha - 1). Throws Error(MeanUndefined) when alpha >= -1.
double g0_mean(const G0Params& p);

/// Log-density with the normalizing constant computed once. Use this in inner
/// loops (likelihoods, quadrature) instead of the free functions.
class GammaDensity {
 public:
  explicit GammaDensity(const GammaParams& p);
  double log_pdf(double z) const {
    return log_norm_ + shape_minus_one_ * std::log(z) - rate_ * z;
  }
  double pdf(double z) const;
  const GammaParams& params() const { return params_; }

 private:
  GammaParams params_;
  double log_norm_;
  double shape_minus_one_;
  double rate_;
};

class G0Density {
 public:
  explicit G0Density(const G0Params& p);
  double log_pdf(double z) const {
    return log_norm_ + shape_minus_one_ * std::log(z) -
           tail_exponent_ * std::log1p(looks_over_gamma_ * z);
  }
  double pdf(double z) const;
  const G0Params& params() const { return params_; }

  // Parameter-only part of the log-density (independent of z).
  double log_norm() const { return log_norm_; }

 private:
  G0Params params_;
  double log_norm_;
  double shape_minus_one_;
  double looks_over_gamma_;
  double tail_exponent_;  // L - alpha
};

// Model-generic helpers used by the information measures.
double log_pdf(const SpeckleModel& m, double z);
double pdf(const SpeckleModel& m, double z);

// A representative intensity magnitude of the law: the mean for Gamma and
// gamma / (-alpha) for G0 (finite even when the mean is not).
double typical_scale(const SpeckleModel& m);

}  // namespace sarcx
