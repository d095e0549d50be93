#include "liftkit/curve_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "liftkit/error.hpp"

namespace liftkit {
namespace {

std::string full(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double(std::string_view text) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
    throw Error(ErrorCode::parse, "'" + std::string(text) + "' is not a number");
  return v;
}

std::int64_t parse_int(std::string_view text) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
    throw Error(ErrorCode::parse, "'" + std::string(text) + "' is not an integer");
  return v;
}

std::optional<Ratio> parse_exact(std::string_view text) {
  if (text.empty()) return std::nullopt;
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Ratio(parse_int(text));
  return Ratio(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out(1);
  for (char c : line) {
    if (c == sep)
      out.emplace_back();
    else if (c != '\r')
      out.back() += c;
  }
  return out;
}

nlohmann::ordered_json band_json(const Band& b) {
  return nlohmann::ordered_json{{"mean", b.mean}, {"min", b.min}, {"max", b.max}};
}

}  // namespace

OutputFormat parse_output_format(std::string_view text) {
  if (text == "text") return OutputFormat::text;
  if (text == "csv") return OutputFormat::csv;
  if (text == "json") return OutputFormat::json;
  throw Error(ErrorCode::invalid_argument, "unknown output format '" + std::string(text) + "' (text, csv, json)");
}

void emit_curves(std::ostream& out, const std::vector<CurveSeries>& series, OutputFormat format) {
  if (series.empty()) throw Error(ErrorCode::invalid_argument, "no series to emit");
  if (format == OutputFormat::json) {
    nlohmann::ordered_json doc;
    doc["series"] = nlohmann::ordered_json::array();
    for (const auto& s : series) {
      nlohmann::ordered_json js{{"name", s.name}, {"x_kind", to_string(s.x_kind)}};
      js["points"] = nlohmann::ordered_json::array();
      for (const auto& p : s.points) {
        nlohmann::ordered_json jp{{"x", p.x}, {"y", p.y}};
        if (p.x_exact) {
          jp["x_num"] = p.x_exact->num();
          jp["x_den"] = p.x_exact->den();
        }
        if (p.y_exact) {
          jp["y_num"] = p.y_exact->num();
          jp["y_den"] = p.y_exact->den();
        }
        js["points"].push_back(std::move(jp));
      }
      doc["series"].push_back(std::move(js));
    }
    out << doc.dump(2) << '\n';
  } else {
    out << "series,x_kind,x,y,x_exact,y_exact\n";
    for (const auto& s : series) {
      if (s.name.find(',') != std::string::npos || s.name.find('\n') != std::string::npos)
        throw Error(ErrorCode::invalid_argument, "series name '" + s.name + "' cannot be written as csv");
      for (const auto& p : s.points) {
        out << s.name << ',' << to_string(s.x_kind) << ',' << full(p.x) << ',' << full(p.y) << ','
            << (p.x_exact ? p.x_exact->exact() : "") << ',' << (p.y_exact ? p.y_exact->exact() : "") << '\n';
      }
    }
  }
  if (!out) throw Error(ErrorCode::io, "failed writing curves");
}

void emit_curves(const std::string& path, const std::vector<CurveSeries>& series, OutputFormat format) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::io, "cannot open '" + path + "' for writing");
  emit_curves(out, series, format);
}

std::vector<CurveSeries> parse_curves(std::istream& in, OutputFormat format) {
  std::vector<CurveSeries> out;
  if (format == OutputFormat::json) {
    nlohmann::json doc;
    try {
      in >> doc;
      for (const auto& js : doc.at("series")) {
        CurveSeries s{js.at("name").get<std::string>(), parse_x_kind(js.at("x_kind").get<std::string>()), {}};
        for (const auto& jp : js.at("points")) {
          CurvePoint p{jp.at("x").get<double>(), jp.at("y").get<double>(), std::nullopt, std::nullopt};
          if (jp.contains("x_num")) p.x_exact = Ratio(jp["x_num"].get<std::int64_t>(), jp["x_den"].get<std::int64_t>());
          if (jp.contains("y_num")) p.y_exact = Ratio(jp["y_num"].get<std::int64_t>(), jp["y_den"].get<std::int64_t>());
          s.points.push_back(std::move(p));
        }
        out.push_back(std::move(s));
      }
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::parse, std::string("invalid curve json: ") + e.what());
    }
    return out;
  }

  std::string line;
  if (!std::getline(in, line) || split(line, ',').size() != 6) throw Error(ErrorCode::parse, "missing curve csv header");
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    const auto f = split(line, ',');
    if (f.size() != 6) throw Error(ErrorCode::parse, "curve csv row has " + std::to_string(f.size()) + " fields");
    const XKind kind = parse_x_kind(f[1]);
    if (out.empty() || out.back().name != f[0] || out.back().x_kind != kind) out.push_back({f[0], kind, {}});
    out.back().points.push_back({parse_double(f[2]), parse_double(f[3]), parse_exact(f[4]), parse_exact(f[5])});
  }
  return out;
}

void write_summary(std::ostream& out, const ResampleSummary& summary, OutputFormat format) {
  if (format == OutputFormat::json) {
    nlohmann::ordered_json doc{{"sample_size", summary.sample_size}, {"seed", summary.seed}};
    doc["rates"] = nlohmann::ordered_json::array();
    for (const auto& rs : summary.rates) {
      nlohmann::ordered_json jr{{"target_rate", rs.target_rate},
                                {"positives", rs.positives},
                                {"realized_rate", rs.realized_rate},
                                {"replicates", rs.replicates},
                                {"auc", band_json(rs.auc)}};
      jr["grid"] = nlohmann::ordered_json::array();
      for (const auto& gp : rs.grid) {
        jr["grid"].push_back(nlohmann::ordered_json{{"fraction_num", gp.fraction.num()},
                                                    {"fraction_den", gp.fraction.den()},
                                                    {"n", gp.n},
                                                    {"p_cum_gains", band_json(gp.p_cum_gains)},
                                                    {"lift", band_json(gp.lift)}});
      }
      doc["rates"].push_back(std::move(jr));
    }
    out << doc.dump(2) << '\n';
  } else {
    out << "target_rate,realized_rate,replicates,fraction,n,pcg_mean,pcg_min,pcg_max,lift_mean,lift_min,lift_max,"
           "auc_mean\n";
    for (const auto& rs : summary.rates) {
      for (const auto& gp : rs.grid) {
        out << full(rs.target_rate) << ',' << full(rs.realized_rate) << ',' << rs.replicates << ','
            << gp.fraction.exact() << ',' << gp.n << ',' << full(gp.p_cum_gains.mean) << ','
            << full(gp.p_cum_gains.min) << ',' << full(gp.p_cum_gains.max) << ',' << full(gp.lift.mean) << ','
            << full(gp.lift.min) << ',' << full(gp.lift.max) << ',' << full(rs.auc.mean) << '\n';
      }
    }
  }
  if (!out) throw Error(ErrorCode::io, "failed writing resample summary");
}

}  // namespace liftkit
