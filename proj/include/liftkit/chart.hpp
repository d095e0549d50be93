#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "liftkit/curve.hpp"
#include "liftkit/metrics.hpp"

namespace liftkit {

enum class ChartKind { gains_count, gains_fraction, lift, decile_lift, benefit, roc };

const char* to_string(ChartKind kind);
ChartKind parse_chart_kind(std::string_view text);

struct ChartSpec {
  ChartKind kind = ChartKind::gains_fraction;
  bool include_baseline = true;
  std::string title;
  std::string output_path;  // used by the CLI; render_chart returns the document
  // Class counts of the evaluated set; the gains-count baseline runs from
  // (0, 0) to (total, positives).
  std::int64_t total = 0;
  std::int64_t positives = 0;
};

// Standalone SVG document. Series are drawn as solid polylines (bars for
// decile-lift) whose point coordinates are in data units inside a
// transformed group, so path data can be checked against the series values.
// The random-targeting baseline is dashed. Throws Error(incompatible_kind)
// when a series' x kind does not fit the chart kind.
std::string render_chart(const ChartSpec& spec, const std::vector<CurveSeries>& series);

// Builds the series for `spec.kind` from one ranked set and renders it.
// lift charts use n/N on the x axis.
std::string render_chart(ChartSpec spec, const RankedTestSet& ranked, const CostSpec& costs = {});

}  // namespace liftkit
