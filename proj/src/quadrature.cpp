#include "sarcx/quadrature.hpp"

#include <sstream>

namespace sarcx {

void QuadratureSpec::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "quadrature tolerances must be > 0");
  }
  if (max_subdivisions == 0) {
    throw Error(ErrorCode::InvalidArgument, "quadrature needs at least one subdivision");
  }
}

namespace detail {

void throw_nonconvergence(double value, double error, std::size_t n) {
  std::ostringstream msg;
  msg << "quadrature did not converge after " << n << " subdivisions (value " << value
      << ", error estimate " << error << ")";
  throw Error(ErrorCode::QuadratureNonConvergence, msg.str());
}

}  // namespace detail
}  // namespace sarcx
