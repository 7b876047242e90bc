#include "sarcx/models.hpp"

#include <cmath>
#include <string>
#include <type_traits>

#include "sarcx/error.hpp"
#include "sarcx/special.hpp"

namespace sarcx {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::InvalidArgument, what);
}

}  // namespace

GammaParams::GammaParams(double mean, double looks) : mean_(mean), looks_(looks) {
  require(std::isfinite(mean) && mean > 0.0, "Gamma mean must be finite and > 0");
  require(std::isfinite(looks) && looks >= 1.0, "number of looks must be >= 1");
}

G0Params::G0Params(double alpha, double gamma, double looks)
    : alpha_(alpha), gamma_(gamma), looks_(looks) {
  require(std::isfinite(alpha) && alpha < 0.0, "G0 alpha must be finite and < 0");
  require(std::isfinite(gamma) && gamma > 0.0, "G0 gamma must be finite and > 0");
  require(std::isfinite(looks) && looks >= 1.0, "number of looks must be >= 1");
}

GammaDensity::GammaDensity(const GammaParams& p)
    : params_(p),
      log_norm_(p.looks() * std::log(p.looks() / p.mean()) -
                special::log_gamma(p.looks())),
      shape_minus_one_(p.looks() - 1.0),
      rate_(p.looks() / p.mean()) {}

double GammaDensity::pdf(double z) const {
  if (z > 0.0) return std::exp(log_pdf(z));
  if (z == 0.0 && params_.looks() == 1.0) return rate_;
  return 0.0;
}

// L^L Γ(L-α) / (γ^α Γ(L) Γ(-α)) · z^(L-1) / (γ+Lz)^(L-α), rewritten as
// (L/γ)^L Γ(L-α)/(Γ(L)Γ(-α)) · z^(L-1) · (1 + Lz/γ)^-(L-α).
G0Density::G0Density(const G0Params& p)
    : params_(p),
      log_norm_(p.looks() * std::log(p.looks() / p.gamma()) +
                special::log_gamma(p.looks() - p.alpha()) -
                special::log_gamma(p.looks()) - special::log_gamma(-p.alpha())),
      shape_minus_one_(p.looks() - 1.0),
      looks_over_gamma_(p.looks() / p.gamma()),
      tail_exponent_(p.looks() - p.alpha()) {}

double G0Density::pdf(double z) const {
  if (z > 0.0) return std::exp(log_pdf(z));
  // L = 1: the density at the origin is -α/γ.
  if (z == 0.0 && params_.looks() == 1.0) return -params_.alpha() / params_.gamma();
  return 0.0;
}

double gamma_pdf(const GammaParams& p, double z) { return GammaDensity(p).pdf(z); }
double g0_pdf(const G0Params& p, double z) { return G0Density(p).pdf(z); }

double gamma_log_pdf(const GammaParams& p, double z) {
  return GammaDensity(p).log_pdf(z);
}
double g0_log_pdf(const G0Params& p, double z) { return G0Density(p).log_pdf(z); }

double g0_mean(const G0Params& p) {
  if (!p.has_mean()) {
    throw Error(ErrorCode::MeanUndefined,
                "G0 mean undefined for alpha = " + std::to_string(p.alpha()) +
                    " (requires alpha < -1)");
  }
  return p.gamma() / (-p.alpha() - 1.0);
}

double log_pdf(const SpeckleModel& m, double z) {
  return std::visit(
      [z](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, GammaParams>) return gamma_log_pdf(p, z);
        else return g0_log_pdf(p, z);
      },
      m);
}

double pdf(const SpeckleModel& m, double z) {
  return std::visit(
      [z](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, GammaParams>) return gamma_pdf(p, z);
        else return g0_pdf(p, z);
      },
      m);
}

double typical_scale(const SpeckleModel& m) {
  if (const auto* g = std::get_if<GammaParams>(&m)) return g->mean();
  const auto& p = std::get<G0Params>(m);
  return p.gamma() / -p.alpha();
}

}  // namespace sarcx
