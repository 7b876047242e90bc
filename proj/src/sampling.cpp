#include "sarcx/sampling.hpp"

#include <cmath>

#include "sarcx/error.hpp"

namespace sarcx {

double VariateSource::uniform() {
  // 53 random mantissa bits, offset by half a step to exclude 0 and 1.
  const std::uint64_t bits = engine_() >> 11;
  return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

double VariateSource::normal() {
  if (has_spare_normal_) {
    has_spare_normal_ = false;
    return spare_normal_;
  }
  double u = 0.0;
  double v = 0.0;
  double s = 0.0;
  do {
    u = 2.0 * uniform() - 1.0;
    v = 2.0 * uniform() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double factor = std::sqrt(-2.0 * std::log(s) / s);
  spare_normal_ = v * factor;
  has_spare_normal_ = true;
  return u * factor;
}

double VariateSource::standard_gamma(double shape) {
  if (shape < 1.0) {
    // X ~ Γ(k+1), U ~ U(0,1)  =>  X·U^(1/k) ~ Γ(k).
    const double x = standard_gamma(shape + 1.0);
    return x * std::pow(uniform(), 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x = 0.0;
    double v = 0.0;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
  }
}

namespace {

void require_count(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "sample count must be >= 1");
}

}  // namespace

std::vector<double> sample_gamma(const GammaParams& p, std::size_t n, std::uint64_t seed) {
  require_count(n);
  VariateSource src(seed);
  const double scale = p.mean() / p.looks();
  std::vector<double> out(n);
  for (auto& z : out) z = scale * src.standard_gamma(p.looks());
  return out;
}

std::vector<double> sample_g0(const G0Params& p, std::size_t n, std::uint64_t seed) {
  require_count(n);
  VariateSource src(seed);
  const double backscatter_shape = -p.alpha();
  const double speckle_scale = 1.0 / p.looks();
  std::vector<double> out(n);
  for (auto& z : out) {
    const double backscatter = p.gamma() / src.standard_gamma(backscatter_shape);
    const double speckle = speckle_scale * src.standard_gamma(p.looks());
    z = backscatter * speckle;
  }
  return out;
}

std::vector<double> sample(const SpeckleModel& m, std::size_t n, std::uint64_t seed) {
  if (const auto* g = std::get_if<GammaParams>(&m)) return sample_gamma(*g, n, seed);
  return sample_g0(std::get<G0Params>(m), n, seed);
}

}  // namespace sarcx
