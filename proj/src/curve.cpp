#include "liftkit/curve.hpp"

#include "liftkit/error.hpp"

namespace liftkit {

const char* to_string(XKind kind) {
  switch (kind) {
    case XKind::count: return "count";
    case XKind::fraction: return "fraction";
    case XKind::fpr: return "fpr";
  }
  return "count";
}

XKind parse_x_kind(std::string_view text) {
  if (text == "count") return XKind::count;
  if (text == "fraction") return XKind::fraction;
  if (text == "fpr") return XKind::fpr;
  throw Error(ErrorCode::parse, "unknown x kind '" + std::string(text) + "'");
}

void validate(const CurveSeries& series) {
  for (std::size_t i = 1; i < series.points.size(); ++i) {
    const double prev = series.points[i - 1].x;
    const double cur = series.points[i].x;
    const bool ok = series.x_kind == XKind::fpr ? cur >= prev : cur > prev;
    if (!ok)
      throw Error(ErrorCode::invalid_argument,
                  "series '" + series.name + "' x values not increasing at point " + std::to_string(i + 1));
  }
}

}  // namespace liftkit
