#pragma once

// Special functions shared by the density, estimation and entropy code.
// Every Gamma-function evaluation in the library goes through here.

namespace sarcx::special {

// ln Gamma(x) for x > 0. Reentrant (does not touch the global signgam).
double log_gamma(double x);

// Digamma psi(x) = d/dx ln Gamma(x) for x > 0.
double digamma(double x);

}  // namespace sarcx::special
