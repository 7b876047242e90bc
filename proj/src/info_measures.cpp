#include "sarcx/info_measures.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "sarcx/special.hpp"

namespace sarcx {

namespace {

// Log-density with the normalizing constant hoisted out of the integrand.
class LogDensity {
 public:
  explicit LogDensity(const SpeckleModel& m) : density_(make(m)) {}

  double operator()(double z) const {
    return std::visit([z](const auto& d) { return d.log_pdf(z); }, density_);
  }

 private:
  using Variant = std::variant<GammaDensity, G0Density>;
  static Variant make(const SpeckleModel& m) {
    if (const auto* g = std::get_if<GammaParams>(&m)) return GammaDensity(*g);
    return G0Density(std::get<G0Params>(m));
  }
  Variant density_;
};

double pair_scale(const SpeckleModel& x, const SpeckleModel& y) {
  return std::sqrt(typical_scale(x) * typical_scale(y));
}

}  // namespace

EntropySpec EntropySpec::shannon() {
  return {Kind::Shannon, [](double y) { return y; },
          [](double x) { return x > 0.0 ? -x * std::log(x) : 0.0; }};
}

EntropySpec EntropySpec::custom(std::function<double(double)> h,
                                std::function<double(double)> phi) {
  return {Kind::Custom, std::move(h), std::move(phi)};
}

DivergenceSpec DivergenceSpec::hellinger() {
  return {Kind::Hellinger, [](double y) { return y / 2.0; },
          [](double x) {
            const double r = std::sqrt(x) - 1.0;
            return r * r;
          }};
}

DivergenceSpec DivergenceSpec::custom(std::function<double(double)> h,
                                      std::function<double(double)> phi) {
  return {Kind::Custom, std::move(h), std::move(phi)};
}

double shannon_entropy(const SpeckleModel& m, const QuadratureSpec& quad) {
  const LogDensity log_f(m);
  auto integrand = [&log_f](double z) {
    if (!(z > 0.0)) return 0.0;
    const double lf = log_f(z);
    const double f = std::exp(lf);
    return f == 0.0 ? 0.0 : -f * lf;
  };
  return integrate_halfline(integrand, quad, typical_scale(m)).value;
}

double shannon_entropy_g0(const G0Params& p, const QuadratureSpec& quad) {
  return shannon_entropy(SpeckleModel{p}, quad);
}

double shannon_entropy_gamma_closed(const GammaParams& p) {
  const double L = p.looks();
  return L - std::log(L / p.mean()) + special::log_gamma(L) +
         (1.0 - L) * special::digamma(L);
}

double hellinger_distance(const SpeckleModel& x, const SpeckleModel& y,
                          const QuadratureSpec& quad) {
  const LogDensity log_x(x);
  const LogDensity log_y(y);
  auto integrand = [&](double z) {
    if (!(z > 0.0)) return 0.0;
    return std::exp(0.5 * (log_x(z) + log_y(z)));
  };
  const double bhattacharyya = integrate_halfline(integrand, quad, pair_scale(x, y)).value;
  return std::clamp(1.0 - bhattacharyya, 0.0, 1.0);
}

double hphi_entropy(const SpeckleModel& m, const EntropySpec& spec,
                    const QuadratureSpec& quad) {
  if (spec.kind == EntropySpec::Kind::Shannon) return shannon_entropy(m, quad);
  const LogDensity log_f(m);
  auto integrand = [&](double z) {
    if (!(z > 0.0)) return 0.0;
    return spec.phi(std::exp(log_f(z)));
  };
  return spec.h(integrate_halfline(integrand, quad, typical_scale(m)).value);
}

double hphi_divergence(const SpeckleModel& x, const SpeckleModel& y,
                       const DivergenceSpec& spec, const QuadratureSpec& quad) {
  if (spec.kind == DivergenceSpec::Kind::Hellinger) return hellinger_distance(x, y, quad);
  const LogDensity log_x(x);
  const LogDensity log_y(y);
  auto integrand = [&](double z) {
    if (!(z > 0.0)) return 0.0;
    const double ly = log_y(z);
    const double fy = std::exp(ly);
    if (fy == 0.0) return 0.0;
    return spec.phi(std::exp(log_x(z) - ly)) * fy;
  };
  return spec.h(integrate_halfline(integrand, quad, pair_scale(x, y)).value);
}

}  // namespace sarcx
