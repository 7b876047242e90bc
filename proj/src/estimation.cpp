#include "sarcx/estimation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "sarcx/error.hpp"

namespace sarcx {

const char* to_string(FitStatus s) {
  switch (s) {
    case FitStatus::Converged: return "converged";
    case FitStatus::BoundaryClamped: return "boundary_clamped";
    case FitStatus::Failed: return "failed";
  }
  return "unknown";
}

GammaParams fit_gamma(std::span<const double> window, double looks) {
  if (window.empty()) throw Error(ErrorCode::InvalidArgument, "empty window");
  double sum = 0.0;
  for (double z : window) {
    if (!(z >= 0.0) || !std::isfinite(z)) {
      throw Error(ErrorCode::InvalidArgument, "window values must be finite and >= 0");
    }
    sum += z;
  }
  if (sum == 0.0) throw Error(ErrorCode::DegenerateWindow, "degenerate window: all values are zero");
  return GammaParams(sum / static_cast<double>(window.size()), looks);
}

double g0_loglik(const G0Params& p, std::span<const double> window) {
  const G0Density density(p);
  double total = 0.0;
  for (double z : window) total += density.log_pdf(z);
  return total;
}

std::optional<G0Params> fit_g0_moments(std::span<const double> window, double looks) {
  if (window.size() < kMinG0Window) {
    throw Error(ErrorCode::InvalidArgument,
                "moment fit needs at least " + std::to_string(kMinG0Window) + " values");
  }
  double m1 = 0.0;
  double m2 = 0.0;
  for (double z : window) {
    m1 += z;
    m2 += z * z;
  }
  const double n = static_cast<double>(window.size());
  m1 /= n;
  m2 /= n;
  if (!(m1 > 0.0)) return std::nullopt;
  // E[Z²]/E[Z]² = (L+1)/L · (-α-1)/(-α-2) for α < -2.
  const double excess = (m2 / (m1 * m1)) * looks / (looks + 1.0) - 1.0;
  if (!(excess > 0.0) || !std::isfinite(excess)) return std::nullopt;
  const double alpha = std::min(-2.0 - 1.0 / excess, -1.05);
  if (!std::isfinite(alpha)) return std::nullopt;
  return G0Params(alpha, m1 * (-alpha - 1.0), looks);
}

namespace {

struct Point {
  double a = 0.0;
  double g = 0.0;
};

Point operator+(Point x, Point y) { return {x.a + y.a, x.g + y.g}; }
Point operator-(Point x, Point y) { return {x.a - y.a, x.g - y.g}; }
Point operator*(double s, Point x) { return {s * x.a, s * x.g}; }

// Negative log-likelihood on the unconstrained plane, with Σ ln z hoisted.
class Objective {
 public:
  Objective(std::span<const double> window, double looks)
      : window_(window), looks_(looks) {
    for (double z : window) sum_log_ += std::log(z);
  }

  double operator()(Point x) const {
    const double alpha = -1.0 - std::exp(x.a);
    const double gamma = std::exp(x.g);
    if (!std::isfinite(alpha) || !(gamma > 0.0) || !std::isfinite(gamma)) {
      return std::numeric_limits<double>::infinity();
    }
    const G0Density density(G0Params(alpha, gamma, looks_));
    const double ratio = looks_ / gamma;
    double tail = 0.0;
    for (double z : window_) tail += std::log1p(ratio * z);
    const double n = static_cast<double>(window_.size());
    const double ll = n * density.log_norm() + (looks_ - 1.0) * sum_log_ -
                      (looks_ - alpha) * tail;
    return std::isfinite(ll) ? -ll : std::numeric_limits<double>::infinity();
  }

 private:
  std::span<const double> window_;
  double looks_;
  double sum_log_ = 0.0;
};

struct SimplexOutcome {
  Point best;
  double value;
  bool converged;
};

class ProjectedNelderMead {
 public:
  ProjectedNelderMead(const Objective& f, double a_lo, double a_hi, double tol)
      : f_(f), a_lo_(a_lo), a_hi_(a_hi), tol_(tol) {}

  SimplexOutcome run(Point start, double step, std::size_t& budget) {
    start = project(start);
    const double da = (start.a + step <= a_hi_) ? step : -step;
    std::array<Point, 3> v = {start, project(start + Point{da, 0.0}),
                              project(start + Point{0.0, step})};
    std::array<double, 3> fv = {f_(v[0]), f_(v[1]), f_(v[2])};
    for (;;) {
      order(v, fv);
      if (diameter(v) < tol_) return {v[0], fv[0], true};
      if (budget == 0) return {v[0], fv[0], false};
      --budget;

      const Point centroid = 0.5 * (v[0] + v[1]);
      const Point reflected = project(centroid + (centroid - v[2]));
      const double fr = f_(reflected);
      if (fr < fv[0]) {
        const Point expanded = project(centroid + 2.0 * (reflected - centroid));
        const double fe = f_(expanded);
        if (fe < fr) {
          v[2] = expanded;
          fv[2] = fe;
        } else {
          v[2] = reflected;
          fv[2] = fr;
        }
        continue;
      }
      if (fr < fv[1]) {
        v[2] = reflected;
        fv[2] = fr;
        continue;
      }
      const bool outside = fr < fv[2];
      const Point contracted = outside ? project(centroid + 0.5 * (reflected - centroid))
                                       : project(centroid + 0.5 * (v[2] - centroid));
      const double fc = f_(contracted);
      if (outside ? fc <= fr : fc < fv[2]) {
        v[2] = contracted;
        fv[2] = fc;
        continue;
      }
      for (std::size_t i = 1; i < 3; ++i) {
        v[i] = project(v[0] + 0.5 * (v[i] - v[0]));
        fv[i] = f_(v[i]);
      }
    }
  }

  Point project(Point x) const { return {std::clamp(x.a, a_lo_, a_hi_), x.g}; }

 private:
  static void order(std::array<Point, 3>& v, std::array<double, 3>& fv) {
    for (std::size_t i = 1; i < 3; ++i) {
      for (std::size_t j = i; j > 0 && fv[j] < fv[j - 1]; --j) {
        std::swap(fv[j], fv[j - 1]);
        std::swap(v[j], v[j - 1]);
      }
    }
  }

  static double diameter(const std::array<Point, 3>& v) {
    double d = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = i + 1; j < 3; ++j) {
        d = std::max(d, std::hypot(v[i].a - v[j].a, v[i].g - v[j].g));
      }
    }
    return d;
  }

  const Objective& f_;
  double a_lo_;
  double a_hi_;
  double tol_;
};

bool has_dispersion(std::span<const double> window) {
  return std::any_of(window.begin(), window.end(),
                     [first = window.front()](double z) { return z != first; });
}

}  // namespace

EstimationResult fit_g0_ml(std::span<const double> window, double looks,
                           const OptimizerSettings& opts) {
  if (window.size() < kMinG0Window) {
    throw Error(ErrorCode::InvalidArgument,
                "G0 fit needs at least " + std::to_string(kMinG0Window) + " values, got " +
                    std::to_string(window.size()));
  }
  for (double z : window) {
    if (!(z > 0.0) || !std::isfinite(z)) {
      throw Error(ErrorCode::InvalidArgument, "G0 fit requires finite positive values");
    }
  }
  if (!(opts.alpha_min < opts.alpha_max) || !(opts.alpha_max < -1.0)) {
    throw Error(ErrorCode::InvalidArgument, "alpha clamp must satisfy alpha_min < alpha_max < -1");
  }

  EstimationResult result{std::nullopt, fit_gamma(window, looks), FitStatus::Failed, 0,
                          std::nullopt};
  if (!has_dispersion(window)) return result;

  const double mean = result.gamma.mean();
  double alpha0 = -3.0;
  if (const auto init = fit_g0_moments(window, looks)) alpha0 = init->alpha();
  alpha0 = std::clamp(alpha0, opts.alpha_min, opts.alpha_max);
  const Point start{std::log(-alpha0 - 1.0), std::log(mean * (-alpha0 - 1.0))};

  const double a_lo = std::log(-opts.alpha_max - 1.0);
  const double a_hi = std::log(-opts.alpha_min - 1.0);
  const Objective objective(window, looks);
  ProjectedNelderMead search(objective, a_lo, a_hi, opts.tolerance);

  std::size_t budget = opts.max_iterations;
  SimplexOutcome outcome = search.run(start, opts.initial_step, budget);
  auto on_bound = [&](const Point& p) {
    return p.a <= a_lo + opts.tolerance || p.a >= a_hi - opts.tolerance;
  };
  // A simplex that collapsed onto the box edge cannot leave it; restart once
  // from the edge point so an interior optimum nearby is still reachable.
  if (outcome.converged && on_bound(outcome.best)) {
    SimplexOutcome again = search.run(outcome.best, opts.initial_step, budget);
    if (again.value <= outcome.value) outcome = again;
  }
  result.iterations = opts.max_iterations - budget;
  if (!outcome.converged || !std::isfinite(outcome.value)) return result;

  Point best = outcome.best;
  result.status = FitStatus::Converged;
  if (on_bound(best)) {
    best.a = best.a <= a_lo + opts.tolerance ? a_lo : a_hi;
    result.status = FitStatus::BoundaryClamped;
  }
  const double alpha = best.a == a_lo   ? opts.alpha_max
                       : best.a == a_hi ? opts.alpha_min
                                        : -1.0 - std::exp(best.a);
  const G0Params fitted(alpha, std::exp(best.g), looks);
  result.g0 = fitted;
  result.loglik = g0_loglik(fitted, window);
  return result;
}

}  // namespace sarcx
