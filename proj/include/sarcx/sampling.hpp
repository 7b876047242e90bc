#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "sarcx/models.hpp"

namespace sarcx {

// Portable variate generation: the engine is std::mt19937_64 (fully specified
// by the standard) and every transform below is implemented here, so a seed
// yields the same sequence with any standard library.
class VariateSource {
 public:
  explicit VariateSource(std::uint64_t seed) : engine_(seed) {}

  // Uniform on the open interval (0, 1).
  double uniform();
  double normal();
  // Gamma with the given shape and unit scale (Marsaglia-Tsang).
  double standard_gamma(double shape);

 private:
  std::mt19937_64 engine_;
  bool has_spare_normal_ = false;
  double spare_normal_ = 0.0;
};

// Draws from Γ(L, L/c).
std::vector<double> sample_gamma(const GammaParams& p, std::size_t n, std::uint64_t seed);

// Draws Z = X·Y with X inverse-Gamma(shape -alpha, scale gamma) backscatter and
// Y ~ Γ(L, L) unit-mean speckle.
std::vector<double> sample_g0(const G0Params& p, std::size_t n, std::uint64_t seed);

std::vector<double> sample(const SpeckleModel& m, std::size_t n, std::uint64_t seed);

}  // namespace sarcx
