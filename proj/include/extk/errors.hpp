#pragma once

#include <stdexcept>
#include <string>

namespace extk {

enum class error_code {
  invalid_argument,
  not_in_domain,
  not_a_root,
  degenerate_root,
  non_positive_lambda,
  out_of_domain,
  out_of_interval,
  wrong_family,
  einstein_not_in_moduli,
  zero_t,
  grid_exceeds_domain,
  non_positive_density,
  quadrature_failure,
  root_find_failure,
};

const char* to_string(error_code code) noexcept;

/// Thrown by constructors and evaluators when an input leaves the validated
/// domain of an operation. Carries a machine-readable code for the CLI.
class DomainError : public std::runtime_error {
 public:
  DomainError(error_code code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  error_code code() const noexcept { return code_; }

 private:
  error_code code_;
};

[[noreturn]] inline void fail(error_code code, const std::string& msg) {
  throw DomainError(code, msg);
}

}  // namespace extk
