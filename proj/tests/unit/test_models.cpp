#include <initializer_list>
#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "sarcx/error.hpp"
#include "sarcx/models.hpp"
#include "sarcx/quadrature.hpp"
#include "support/oracles.hpp"

using namespace sarcx;

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(GammaParams(0.0, 3.0), Error);
  CHECK_THROWS_AS(GammaParams(1.0, 0.5), Error);
  CHECK_THROWS_AS(G0Params(0.0, 1.0, 1.0), Error);
  CHECK_THROWS_AS(G0Params(-2.0, -1.0, 1.0), Error);
  CHECK_THROWS_AS(G0Params(-2.0, 1.0, 0.9), Error);
  CHECK_NOTHROW(G0Params(-0.5, 1.0, 2.5));
}

TEST_CASE("gamma_pdf") {
  const GammaParams unit(1.0, 1.0);
  CHECK(gamma_pdf(unit, 1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  CHECK(gamma_pdf(unit, 0.0) == 1.0);
  CHECK(gamma_pdf(GammaParams(1.0, 3.0), 0.0) == 0.0);
  // 40-digit evaluation of (L/c)^L/Γ(L) z^(L-1) e^(-Lz/c) at c=2, L=3, z=2.
  CHECK(gamma_pdf(GammaParams(2.0, 3.0), 2.0) ==
        doctest::Approx(0.336062711483081615110561305637916992264).epsilon(1e-14));
}

TEST_CASE("g0_pdf") {
  const G0Params p(-2.0, 1.0, 1.0);
  // L = 1 reduces to (-α) γ^(-α) (γ+z)^(α-1).
  auto closed = [](double z) { return 2.0 * std::pow(1.0 + z, -3.0); };
  CHECK(g0_pdf(p, 0.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(g0_pdf(p, 1.0) == doctest::Approx(0.25).epsilon(1e-14));
  for (double z : {0.1, 0.7, 3.0, 25.0}) CHECK(g0_pdf(p, z) == doctest::Approx(closed(z)).epsilon(1e-13));
  CHECK(g0_pdf(G0Params(-2.0, 1.0, 3.0), 0.0) == 0.0);
  // Exact rational: 27·720·81/12 / 6^7.
  CHECK(g0_pdf(G0Params(-4.0, 3.0, 3.0), 1.0) == doctest::Approx(0.46875).epsilon(1e-14));
}

TEST_CASE("log densities") {
  CHECK(gamma_log_pdf(GammaParams(1.0, 1.0), 1.0) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(g0_log_pdf(G0Params(-2.0, 1.0, 1.0), 1.0) == doctest::Approx(std::log(0.25)).epsilon(1e-14));

  SUBCASE("agree with literal formula evaluation") {
    for (double L : {1.0, 2.5, 3.0, 8.0}) {
      for (double c : {0.5, 1.0, 10.0}) {
        for (double z : {0.01, 0.3, 1.0, 4.0, 20.0}) {
          const double ref = oracle::gamma_pdf(c, L, z);
          CHECK(std::exp(gamma_log_pdf(GammaParams(c, L), z)) ==
                doctest::Approx(ref).epsilon(1e-12));
        }
      }
      for (double a : {-1.5, -3.0, -6.0, -12.0}) {
        for (double g : {0.5, 3.0}) {
          for (double z : {0.01, 0.3, 1.0, 4.0, 20.0}) {
            const double ref = oracle::g0_pdf(a, g, L, z);
            CHECK(std::exp(g0_log_pdf(G0Params(a, g, L), z)) ==
                  doctest::Approx(ref).epsilon(1e-12));
          }
        }
      }
    }
  }

  SUBCASE("exp(log_pdf) == pdf wherever the pdf is representable") {
    for (double L : {1.0, 3.0, 8.0}) {
      for (double z : {1e-4, 0.5, 2.0, 50.0}) {
        const GammaParams gp(1.3, L);
        const G0Params g0(-3.5, 2.0, L);
        const double fg = gamma_pdf(gp, z);
        const double f0 = g0_pdf(g0, z);
        if (fg > 1e-300) CHECK(std::abs(std::exp(gamma_log_pdf(gp, z)) - fg) <= 1e-12 * fg);
        if (f0 > 1e-300) CHECK(std::abs(std::exp(g0_log_pdf(g0, z)) - f0) <= 1e-12 * f0);
      }
    }
  }

  SUBCASE("finite where the raw density under/overflows") {
    const double lg = gamma_log_pdf(GammaParams(1e-3, 400.0), 1e3);
    CHECK(std::isfinite(lg));
    CHECK(gamma_pdf(GammaParams(1e-3, 400.0), 1e3) == 0.0);
    const double l0 = g0_log_pdf(G0Params(-300.0, 1e-5, 200.0), 1e8);
    CHECK(std::isfinite(l0));
    CHECK(std::isfinite(g0_log_pdf(G0Params(-1.01, 1e200, 1.0), 1e-200)));
  }
}

TEST_CASE("g0_mean") {
  CHECK(g0_mean(G0Params(-2.0, 1.0, 5.0)) == 1.0);
  CHECK(g0_mean(G0Params(-4.0, 3.0, 3.0)) == 1.0);
  try {
    g0_mean(G0Params(-1.0, 1.0, 1.0));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MeanUndefined);
  }
}

TEST_CASE("densities integrate to one over the stress grid") {
  for (double L : {1.0, 3.0, 8.0}) {
    for (double c : {0.5, 1.0, 10.0}) {
      const GammaParams p(c, L);
      const auto r = integrate_halfline([&](double z) { return gamma_pdf(p, z); });
      CHECK(r.value == doctest::Approx(1.0).epsilon(1e-6));
    }
    for (double a : {-1.5, -3.0, -6.0, -12.0}) {
      for (double g : {0.5, 3.0}) {
        const G0Params p(a, g, L);
        const auto r = integrate_halfline([&](double z) { return g0_pdf(p, z); });
        CHECK(std::abs(r.value - 1.0) <= 1e-6);
      }
    }
  }
}

TEST_CASE("mean-matched G0 approaches the Gamma law") {
  const double alphas[] = {-2.0, -4.0, -8.0, -16.0, -32.0};
  const double points[] = {0.5, 1.0, 2.0};
  auto gap = [](double a, double L, double z) {
    return std::abs(g0_pdf(G0Params(a, -a - 1.0, L), z) - gamma_pdf(GammaParams(1.0, L), z));
  };
  // Pointwise at L = 1.
  for (double z : points) {
    double previous = INFINITY;
    for (double a : alphas) {
      CHECK(gap(a, 1.0, z) < previous);
      previous = gap(a, 1.0, z);
    }
  }
  // For L > 1 the curves cross near the mode (at L = 3, z = 0.5 the gap grows
  // from alpha = -2 to -4), so the largest gap over the points is used.
  for (double L : {1.0, 3.0, 8.0}) {
    double previous = INFINITY;
    for (double a : alphas) {
      double worst = 0.0;
      for (double z : points) worst = std::max(worst, gap(a, L, z));
      CHECK(worst < previous);
      previous = worst;
    }
  }
}
