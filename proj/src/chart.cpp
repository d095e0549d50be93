#include "liftkit/chart.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "liftkit/error.hpp"

namespace liftkit {
namespace {

constexpr double kWidth = 640;
constexpr double kHeight = 420;
constexpr double kLeft = 70;
constexpr double kRight = kWidth - 20;
constexpr double kTop = 50;
constexpr double kBottom = kHeight - 60;

constexpr const char* kPalette[] = {"#000000", "#d62728", "#2ca02c", "#1f77b4", "#9467bd", "#ff7f0e"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

bool accepts(ChartKind kind, XKind x) {
  switch (kind) {
    case ChartKind::gains_count: return x == XKind::count;
    case ChartKind::gains_fraction: return x == XKind::fraction;
    case ChartKind::lift: return x == XKind::count || x == XKind::fraction;
    case ChartKind::decile_lift: return x == XKind::fraction;
    case ChartKind::benefit: return x == XKind::count;
    case ChartKind::roc: return x == XKind::fpr;
  }
  return false;
}

const char* y_label(ChartKind kind) {
  switch (kind) {
    case ChartKind::gains_count: return "CumGains(n)";
    case ChartKind::gains_fraction: return "p-CumGains(n/N)";
    case ChartKind::lift:
    case ChartKind::decile_lift: return "Lift";
    case ChartKind::benefit: return "CumBenefit(n)";
    case ChartKind::roc: return "TPR";
  }
  return "";
}

const char* x_label(ChartKind kind, XKind x) {
  if (kind == ChartKind::decile_lift) return "Decile (n/N)";
  switch (x) {
    case XKind::count: return "n";
    case XKind::fraction: return "n/N";
    case XKind::fpr: return "FPR";
  }
  return "";
}

struct Frame {
  double x0, x1, y0, y1;

  double px(double x) const { return kLeft + (x - x0) / (x1 - x0) * (kRight - kLeft); }
  double py(double y) const { return kBottom - (y - y0) / (y1 - y0) * (kBottom - kTop); }
  std::string transform() const {
    const double sx = (kRight - kLeft) / (x1 - x0);
    const double sy = (kBottom - kTop) / (y1 - y0);
    return "matrix(" + num(sx) + " 0 0 " + num(-sy) + " " + num(kLeft - x0 * sx) + " " + num(kBottom + y0 * sy) + ")";
  }
};

Frame frame_for(ChartKind kind, const std::vector<CurveSeries>& series, const ChartSpec& spec) {
  double xmax = 0.0, ymin = 0.0, ymax = 0.0;
  for (const auto& s : series)
    for (const auto& p : s.points) {
      xmax = std::max(xmax, p.x);
      ymin = std::min(ymin, p.y);
      ymax = std::max(ymax, p.y);
    }
  switch (kind) {
    case ChartKind::gains_fraction:
    case ChartKind::roc: return {0.0, 1.0, 0.0, 1.0};
    case ChartKind::decile_lift: return {0.0, 1.05, 0.0, std::max(1.0, ymax) * 1.1};
    case ChartKind::lift: return {0.0, std::max(xmax, 1.0), 0.0, std::max(1.0, ymax) * 1.1};
    case ChartKind::gains_count:
      xmax = std::max(xmax, static_cast<double>(spec.total));
      ymax = std::max(ymax, static_cast<double>(spec.positives));
      break;
    case ChartKind::benefit: break;
  }
  if (xmax <= 0.0) xmax = 1.0;
  double span = ymax - ymin;
  if (span <= 0.0) span = 1.0;
  return {0.0, xmax, ymin - (ymin < 0.0 ? 0.05 * span : 0.0), ymax + 0.05 * span};
}

void axes(std::ostringstream& svg, const Frame& f, ChartKind kind, XKind xk) {
  svg << "<g class=\"axes\" stroke=\"#444444\" stroke-width=\"1\" fill=\"none\">\n";
  svg << "<line x1=\"" << kLeft << "\" y1=\"" << kBottom << "\" x2=\"" << kRight << "\" y2=\"" << kBottom << "\"/>\n";
  svg << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\"" << kBottom << "\"/>\n";
  svg << "</g>\n<g class=\"ticks\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#444444\">\n";
  for (int i = 0; i <= 5; ++i) {
    const double xv = f.x0 + (f.x1 - f.x0) * i / 5.0;
    const double yv = f.y0 + (f.y1 - f.y0) * i / 5.0;
    char xl[32], yl[32];
    std::snprintf(xl, sizeof xl, "%.3g", xv);
    std::snprintf(yl, sizeof yl, "%.3g", yv);
    svg << "<text x=\"" << num(f.px(xv)) << "\" y=\"" << num(kBottom + 16) << "\" text-anchor=\"middle\">" << xl
        << "</text>\n";
    svg << "<text x=\"" << num(kLeft - 6) << "\" y=\"" << num(f.py(yv) + 4) << "\" text-anchor=\"end\">" << yl
        << "</text>\n";
  }
  svg << "</g>\n";
  svg << "<text class=\"x-label\" x=\"" << num((kLeft + kRight) / 2) << "\" y=\"" << num(kHeight - 20)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" << escape(x_label(kind, xk))
      << "</text>\n";
  svg << "<text class=\"y-label\" x=\"18\" y=\"" << num((kTop + kBottom) / 2) << "\" transform=\"rotate(-90 18 "
      << num((kTop + kBottom) / 2) << ")\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
      << escape(y_label(kind)) << "</text>\n";
}

std::vector<std::pair<double, double>> baseline(ChartKind kind, const Frame& f, const ChartSpec& spec) {
  switch (kind) {
    case ChartKind::gains_count:
      if (spec.total <= 0)
        throw Error(ErrorCode::invalid_argument, "gains-count baseline needs the set's total and positive counts");
      return {{0.0, 0.0}, {static_cast<double>(spec.total), static_cast<double>(spec.positives)}};
    case ChartKind::gains_fraction: return {{0.0, 0.0}, {1.0, 1.0}};
    case ChartKind::lift:
    case ChartKind::decile_lift: return {{f.x0, 1.0}, {f.x1, 1.0}};
    case ChartKind::benefit:
    case ChartKind::roc: break;
  }
  return {};
}

}  // namespace

const char* to_string(ChartKind kind) {
  switch (kind) {
    case ChartKind::gains_count: return "gains-count";
    case ChartKind::gains_fraction: return "gains-fraction";
    case ChartKind::lift: return "lift";
    case ChartKind::decile_lift: return "decile-lift";
    case ChartKind::benefit: return "benefit";
    case ChartKind::roc: return "roc";
  }
  return "gains-fraction";
}

ChartKind parse_chart_kind(std::string_view text) {
  for (auto k : {ChartKind::gains_count, ChartKind::gains_fraction, ChartKind::lift, ChartKind::decile_lift,
                 ChartKind::benefit, ChartKind::roc})
    if (text == to_string(k)) return k;
  throw Error(ErrorCode::invalid_argument, "unknown chart kind '" + std::string(text) + "'");
}

std::string render_chart(const ChartSpec& spec, const std::vector<CurveSeries>& series) {
  if (series.empty()) throw Error(ErrorCode::invalid_argument, "chart needs at least one series");
  for (const auto& s : series) {
    if (!accepts(spec.kind, s.x_kind))
      throw Error(ErrorCode::incompatible_kind, std::string("series '") + s.name + "' has x kind " +
                                                    to_string(s.x_kind) + ", not usable in a " + to_string(spec.kind) +
                                                    " chart");
    if (s.x_kind != series.front().x_kind)
      throw Error(ErrorCode::incompatible_kind, "series in one chart must share an x kind");
  }

  const Frame f = frame_for(spec.kind, series, spec);
  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\" data-kind=\"" << to_string(spec.kind) << "\">\n";
  svg << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"#ffffff\"/>\n";
  if (!spec.title.empty())
    svg << "<text class=\"title\" x=\"" << num(kWidth / 2) << "\" y=\"28\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"15\">" << escape(spec.title) << "</text>\n";
  axes(svg, f, spec.kind, series.front().x_kind);

  svg << "<g class=\"plot\" transform=\"" << f.transform() << "\">\n";
  if (spec.include_baseline) {
    const auto line = baseline(spec.kind, f, spec);
    if (!line.empty()) {
      svg << "<polyline class=\"baseline\" fill=\"none\" stroke=\"#777777\" stroke-width=\"1.5\" "
          << "stroke-dasharray=\"6 4\" vector-effect=\"non-scaling-stroke\" points=\"";
      for (std::size_t i = 0; i < line.size(); ++i)
        svg << (i ? " " : "") << num(line[i].first) << ',' << num(line[i].second);
      svg << "\"/>\n";
    }
  }
  for (std::size_t s = 0; s < series.size(); ++s) {
    const char* color = kPalette[s % std::size(kPalette)];
    const auto& cs = series[s];
    if (spec.kind == ChartKind::decile_lift) {
      svg << "<g class=\"bars\" data-series=\"" << escape(cs.name) << "\" fill=\"" << color << "\">\n";
      const double width = 0.08 / static_cast<double>(series.size());
      for (const auto& p : cs.points) {
        const double x = p.x - 0.04 + width * static_cast<double>(s);
        svg << "<rect x=\"" << num(x) << "\" y=\"0\" width=\"" << num(width) << "\" height=\"" << num(p.y)
            << "\"/>\n";
      }
      svg << "</g>\n";
    } else {
      svg << "<polyline class=\"series\" data-series=\"" << escape(cs.name) << "\" fill=\"none\" stroke=\"" << color
          << "\" stroke-width=\"2\" vector-effect=\"non-scaling-stroke\" points=\"";
      for (std::size_t i = 0; i < cs.points.size(); ++i)
        svg << (i ? " " : "") << num(cs.points[i].x) << ',' << num(cs.points[i].y);
      svg << "\"/>\n";
    }
  }
  svg << "</g>\n";

  if (series.size() > 1) {
    svg << "<g class=\"legend\" font-family=\"sans-serif\" font-size=\"11\">\n";
    for (std::size_t s = 0; s < series.size(); ++s) {
      const double y = kTop + 14.0 * static_cast<double>(s);
      svg << "<line x1=\"" << num(kRight - 140) << "\" y1=\"" << num(y) << "\" x2=\"" << num(kRight - 120)
          << "\" y2=\"" << num(y) << "\" stroke=\"" << kPalette[s % std::size(kPalette)] << "\" stroke-width=\"2\"/>\n";
      svg << "<text x=\"" << num(kRight - 115) << "\" y=\"" << num(y + 4) << "\">" << escape(series[s].name)
          << "</text>\n";
    }
    svg << "</g>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

std::string render_chart(ChartSpec spec, const RankedTestSet& ranked, const CostSpec& costs) {
  spec.total = ranked.size();
  spec.positives = ranked.positives();
  std::vector<CurveSeries> series;
  switch (spec.kind) {
    case ChartKind::gains_count: series.push_back(gains_series(ranked, XKind::count)); break;
    case ChartKind::gains_fraction: series.push_back(gains_series(ranked, XKind::fraction)); break;
    case ChartKind::lift: series.push_back(lift_series(ranked, XKind::fraction)); break;
    case ChartKind::decile_lift: series.push_back(decile_series(ranked)); break;
    case ChartKind::benefit: series.push_back(benefit_series(ranked, costs)); break;
    case ChartKind::roc: series.push_back(roc_points(ranked)); break;
  }
  return render_chart(spec, series);
}

}  // namespace liftkit
