#include "liftkit/error.hpp"

namespace liftkit {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::empty_input: return "empty input";
    case ErrorCode::non_binary_label: return "non-binary label";
    case ErrorCode::duplicate_id: return "duplicate id";
    case ErrorCode::non_finite_score: return "non-finite score";
    case ErrorCode::out_of_range: return "out of range";
    case ErrorCode::undefined_ratio: return "undefined ratio";
    case ErrorCode::single_class: return "single-class input";
    case ErrorCode::label_mismatch: return "label multiset mismatch";
    case ErrorCode::invalid_swap: return "invalid swap";
    case ErrorCode::infeasible: return "infeasible";
    case ErrorCode::parse: return "parse error";
    case ErrorCode::io: return "i/o error";
    case ErrorCode::incompatible_kind: return "incompatible series kind";
    case ErrorCode::invalid_argument: return "invalid argument";
  }
  return "unknown error";
}

}  // namespace liftkit
