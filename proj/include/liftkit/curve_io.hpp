#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "liftkit/curve.hpp"
#include "liftkit/resample.hpp"

namespace liftkit {

enum class OutputFormat { text, csv, json };

OutputFormat parse_output_format(std::string_view text);

// Writes series losslessly. csv: one row per point,
//   series,x_kind,x,y,x_exact,y_exact
// with doubles at 17 significant digits and exact fields as "num/den" (empty
// when absent). json: {"series":[{"name","x_kind","points":[{"x","y",
// "x_num","x_den","y_num","y_den"}]}]}. `text` is treated as csv.
void emit_curves(std::ostream& out, const std::vector<CurveSeries>& series, OutputFormat format);
void emit_curves(const std::string& path, const std::vector<CurveSeries>& series, OutputFormat format);

std::vector<CurveSeries> parse_curves(std::istream& in, OutputFormat format);

// Resample summaries: csv has one row per (rate, grid point); json nests grid
// points under each rate. Output bytes depend only on the summary.
void write_summary(std::ostream& out, const ResampleSummary& summary, OutputFormat format);

}  // namespace liftkit
