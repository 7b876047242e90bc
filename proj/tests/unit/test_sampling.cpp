#include <initializer_list>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "sarcx/error.hpp"
#include "sarcx/sampling.hpp"
#include "support/ks.hpp"

using namespace sarcx;

namespace {
double mean_of(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}
}  // namespace

TEST_CASE("sample means converge") {
  // sd of the mean: sqrt(c²/(nL)) = 5e-4 for Γ; the G0 variance is finite here too.
  const auto g = sample_gamma(GammaParams(1.0, 4.0), 1000000, 42);
  CHECK(std::abs(mean_of(g) - 1.0) < 0.01);
  const auto z = sample_g0(G0Params(-4.0, 3.0, 3.0), 1000000, 7);
  CHECK(std::abs(mean_of(z) - 1.0) < 0.02);
  for (double v : z) REQUIRE(v > 0.0);
}

TEST_CASE("samplers are deterministic per seed") {
  CHECK(sample_gamma(GammaParams(2.0, 3.0), 1000, 5) == sample_gamma(GammaParams(2.0, 3.0), 1000, 5));
  CHECK(sample_g0(G0Params(-2.0, 1.0, 1.0), 1000, 5) == sample_g0(G0Params(-2.0, 1.0, 1.0), 1000, 5));
  CHECK(sample_g0(G0Params(-2.0, 1.0, 1.0), 1000, 5) != sample_g0(G0Params(-2.0, 1.0, 1.0), 1000, 6));
  CHECK_THROWS_AS(sample_gamma(GammaParams(1.0, 1.0), 0, 1), Error);
}

TEST_CASE("uniform variates stay in the open unit interval") {
  VariateSource src(3);
  for (int i = 0; i < 100000; ++i) {
    const double u = src.uniform();
    REQUIRE(u > 0.0);
    REQUIRE(u < 1.0);
  }
}

TEST_CASE("Kolmogorov-Smirnov against the model CDF") {
  constexpr std::size_t n = 100000;
  const double crit = testing::ks_critical_1pct(n);
  SUBCASE("gamma") {
    for (double L : {1.0, 3.0, 2.5}) {
      const GammaParams p(1.7, L);
      CHECK(testing::ks_statistic(sample_gamma(p, n, 11), p) < crit);
    }
  }
  SUBCASE("g0") {
    const G0Params cases[] = {{-1.5, 0.5, 3.0}, {-4.0, 3.0, 3.0}, {-0.7, 1.0, 1.0}, {-10.0, 9.0, 8.0}};
    for (const auto& p : cases) CHECK(testing::ks_statistic(sample_g0(p, n, 13), p) < crit);
  }
}
