#include <initializer_list>
#include <cmath>

#include "doctest.h"
#include "sarcx/error.hpp"
#include "sarcx/models.hpp"
#include "sarcx/quadrature.hpp"

using namespace sarcx;

TEST_CASE("half-line integrals of known value") {
  const QuadratureSpec spec;
  const GammaParams exp1(1.0, 1.0);
  auto r = integrate_halfline([&](double z) { return gamma_pdf(exp1, z); }, spec);
  CHECK(std::abs(r.value - 1.0) <= 1e-8);
  CHECK(r.error <= std::max(spec.abs_tol, spec.rel_tol * std::abs(r.value)));

  const GammaParams g(2.0, 3.0);
  r = integrate_halfline([&](double z) { return z * gamma_pdf(g, z); }, spec);
  CHECK(std::abs(r.value - 2.0) <= 1e-6);

  const G0Params g0(-4.0, 3.0, 3.0);
  r = integrate_halfline([&](double z) { return g0_pdf(g0, z); }, spec);
  CHECK(std::abs(r.value - 1.0) <= 1e-6);
}

TEST_CASE("scale only relocates the mass") {
  const GammaParams g(1e4, 3.0);
  auto f = [&](double z) { return gamma_pdf(g, z); };
  CHECK(std::abs(integrate_halfline(f, {}, 1e4).value - 1.0) <= 1e-8);
  CHECK(std::abs(integrate_halfline(f, {}, 1.0).value - 1.0) <= 1e-6);
}

TEST_CASE("finite interval") {
  auto r = integrate_interval([](double x) { return x * x * x; }, 0.0, 2.0);
  CHECK(r.value == doctest::Approx(4.0).epsilon(1e-14));
  r = integrate_interval([](double x) { return std::sqrt(x); }, 0.0, 1.0);
  CHECK(r.value == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
}

TEST_CASE("non-convergence is reported") {
  QuadratureSpec tight{1e-14, 1e-14, 2};
  try {
    integrate_halfline([](double z) { return std::exp(-z) * std::abs(std::sin(50.0 * z)); }, tight);
    FAIL("expected non-convergence");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::QuadratureNonConvergence);
  }
  CHECK_THROWS_AS(integrate_halfline([](double) { return NAN; }), Error);
}

TEST_CASE("invalid specs are rejected") {
  CHECK_THROWS_AS(integrate_halfline([](double z) { return std::exp(-z); }, {0.0, 1e-6, 10}), Error);
  CHECK_THROWS_AS(integrate_halfline([](double z) { return std::exp(-z); }, {1e-8, -1.0, 10}), Error);
  CHECK_THROWS_AS(integrate_halfline([](double z) { return std::exp(-z); }, {1e-8, 1e-6, 0}), Error);
}

TEST_CASE("error estimates bound the change from tightening tolerances") {
  const QuadratureSpec loose;
  const QuadratureSpec tighter{loose.abs_tol / 2, loose.rel_tol / 2, loose.max_subdivisions};
  for (double a : {-1.5, -3.0, -12.0}) {
    for (double L : {1.0, 3.0, 8.0}) {
      const G0Params p(a, 0.5, L);
      auto f = [&](double z) { return -g0_pdf(p, z) * (z > 0 ? g0_log_pdf(p, z) : 0.0); };
      const auto r1 = integrate_halfline(f, loose);
      const auto r2 = integrate_halfline(f, tighter);
      CHECK(std::abs(r1.value - r2.value) <= r1.error);
    }
  }
}
