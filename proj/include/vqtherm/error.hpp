#pragma once

#include <stdexcept>
#include <string>

namespace vqtherm {

/// Failure categories; mirrored one-to-one by the C API status codes.
enum class ErrorCode {
  invalid_argument = 1,  // bad value, wrong size, non-finite input
  constraint = 2,        // resource bound (gap bound, bath window) violated
  degenerate = 3,        // ill-posed machine (zero virtual gap, efficiency pole, ...)
  solver = 4,            // linear solve failed to reach the required residual
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace vqtherm
