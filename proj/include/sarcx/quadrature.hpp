#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "sarcx/error.hpp"

namespace sarcx {

struct QuadratureSpec {
  double abs_tol = 1e-8;
  double rel_tol = 1e-6;
  std::size_t max_subdivisions = 200;

  // Throws Error(InvalidArgument) on non-positive tolerances or zero budget.
  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  std::size_t subdivisions = 0;
};

namespace detail {

// 15-point Kronrod abscissae/weights and the embedded 7-point Gauss weights.
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double lo;
  double hi;
  double value;
  double error;
};

// One Gauss-Kronrod 7/15 panel with the QUADPACK error heuristic.
template <class F>
Segment gk15(F& f, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double f_center = f(center);
  double kronrod = f_center * kKronrodWeights[7];
  double gauss = f_center * kGaussWeights[3];
  double abs_sum = std::abs(kronrod);
  std::array<double, 7> f_lo{};
  std::array<double, 7> f_hi{};
  for (std::size_t i = 0; i < 7; ++i) {
    const double dx = half * kKronrodNodes[i];
    f_lo[i] = f(center - dx);
    f_hi[i] = f(center + dx);
    const double pair = f_lo[i] + f_hi[i];
    kronrod += kKronrodWeights[i] * pair;
    abs_sum += kKronrodWeights[i] * (std::abs(f_lo[i]) + std::abs(f_hi[i]));
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * pair;
  }
  const double mean = 0.5 * kronrod;
  double asc = kKronrodWeights[7] * std::abs(f_center - mean);
  for (std::size_t i = 0; i < 7; ++i) {
    asc += kKronrodWeights[i] * (std::abs(f_lo[i] - mean) + std::abs(f_hi[i] - mean));
  }
  const double result = kronrod * half;
  abs_sum *= std::abs(half);
  asc *= std::abs(half);
  double err = std::abs((kronrod - gauss) * half);
  if (asc != 0.0 && err != 0.0) {
    err = asc * std::min(1.0, std::pow(200.0 * err / asc, 1.5));
  }
  constexpr double eps = std::numeric_limits<double>::epsilon();
  if (abs_sum > std::numeric_limits<double>::min() / (50.0 * eps)) {
    err = std::max(50.0 * eps * abs_sum, err);
  }
  return {lo, hi, result, err};
}

[[noreturn]] void throw_nonconvergence(double value, double error, std::size_t n);

// Globally adaptive bisection of the segment with the largest error estimate.
template <class F>
QuadratureResult adaptive(F& f, double lo, double hi, const QuadratureSpec& spec) {
  spec.validate();
  std::vector<Segment> segments;
  segments.reserve(spec.max_subdivisions + 1);
  segments.push_back(gk15(f, lo, hi));
  for (;;) {
    double value = 0.0;
    double error = 0.0;
    std::size_t worst = 0;
    for (std::size_t i = 0; i < segments.size(); ++i) {
      value += segments[i].value;
      error += segments[i].error;
      if (segments[i].error > segments[worst].error) worst = i;
    }
    if (!std::isfinite(value) || !std::isfinite(error)) {
      throw_nonconvergence(value, error, segments.size());
    }
    if (error <= std::max(spec.abs_tol, spec.rel_tol * std::abs(value))) {
      return {value, error, segments.size()};
    }
    if (segments.size() >= spec.max_subdivisions) {
      throw_nonconvergence(value, error, segments.size());
    }
    const Segment s = segments[worst];
    const double mid = 0.5 * (s.lo + s.hi);
    if (!(mid > s.lo && mid < s.hi)) throw_nonconvergence(value, error, segments.size());
    segments[worst] = gk15(f, s.lo, mid);
    segments.push_back(gk15(f, mid, s.hi));
  }
}

}  // namespace detail

// Adaptive Gauss-Kronrod on [lo, hi].
template <class F>
QuadratureResult integrate_interval(F&& f, double lo, double hi,
                                    const QuadratureSpec& spec = {}) {
  return detail::adaptive(f, lo, hi, spec);
}

// ∫ f(z) dz over (0, ∞) via z = scale·t/(1-t), t ∈ (0, 1). The scale only
// moves where the integrand mass lands in t; the default matches z = t/(1-t).
// Throws Error(QuadratureNonConvergence) when the subdivision budget runs out.
template <class F>
QuadratureResult integrate_halfline(F&& f, const QuadratureSpec& spec = {},
                                    double scale = 1.0) {
  auto mapped = [&f, scale](double t) {
    const double one_minus = 1.0 - t;
    const double z = scale * t / one_minus;
    const double jacobian = scale / (one_minus * one_minus);
    const double v = f(z);
    return v == 0.0 ? 0.0 : v * jacobian;
  };
  return detail::adaptive(mapped, 0.0, 1.0, spec);
}

}  // namespace sarcx
