#pragma once

#include <stdexcept>
#include <string>

namespace liftkit {

enum class ErrorCode {
  empty_input,
  non_binary_label,
  duplicate_id,
  non_finite_score,
  out_of_range,
  undefined_ratio,   // denominator would be zero (n = 0 or N+ = 0)
  single_class,
  label_mismatch,
  invalid_swap,
  infeasible,
  parse,
  io,
  incompatible_kind,
  invalid_argument,
};

const char* to_string(ErrorCode code);

// All library failures are reported through this type. The code lets callers
// (the CLI in particular) map failures to exit statuses without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace liftkit
