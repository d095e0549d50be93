#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liftkit/ratio.hpp"

namespace liftkit {

enum class XKind {
  count,     // x = n
  fraction,  // x = n / N
  fpr,       // x = false positive rate (ROC)
};

const char* to_string(XKind kind);
XKind parse_x_kind(std::string_view text);

struct CurvePoint {
  double x = 0.0;
  double y = 0.0;
  // Present when the coordinate is an exact rational; value() of the exact
  // form equals the double.
  std::optional<Ratio> x_exact;
  std::optional<Ratio> y_exact;

  static CurvePoint exact(const Ratio& x, const Ratio& y) { return {x.value(), y.value(), x, y}; }

  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

struct CurveSeries {
  std::string name;
  XKind x_kind = XKind::count;
  std::vector<CurvePoint> points;

  friend bool operator==(const CurveSeries&, const CurveSeries&) = default;
};

// x must be strictly increasing, except for fpr series where vertical ROC
// steps make it non-decreasing. Throws Error(invalid_argument).
void validate(const CurveSeries& series);

}  // namespace liftkit
