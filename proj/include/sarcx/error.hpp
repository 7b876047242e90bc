#pragma once

#include <stdexcept>
#include <string>

namespace sarcx {

enum class ErrorCode {
  InvalidArgument,
  MeanUndefined,
  DegenerateWindow,
  QuadratureNonConvergence,
  Io,
  Format,
  Parse,
  InvalidSpec,
};

// Single exception type for the library; the code drives the C API status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sarcx
