#pragma once

#include <stdexcept>
#include <string>

namespace bifkit {

// Error categories. They map one-to-one onto the C API status codes and
// onto the CLI exit codes, so every layer reports the same failure kind.
enum class ErrorCode {
  invalid_argument,
  bad_config,
  singular_matrix,
  dimension_too_small,
  no_convergence,
  domain_violation,
  blow_up,
  singular_jacobian,
  singular_bordered_system,
  singular_extended_jacobian,
  newton_diverged,
  seed_failure,
  trace_abort,
  locate_failure,
  io_error,
  unknown_model,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace bifkit
