#include "liftkit/scored_file.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_set>

#include <json.hpp>

#include "liftkit/error.hpp"

namespace liftkit {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

// Splits one delimited line; double quotes group a field and "" escapes a quote.
std::vector<std::string> split_fields(std::string_view line, char delimiter) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == delimiter) {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  for (auto& f : fields) f = std::string(trim(f));
  return fields;
}

std::string where(const ScoredFile& file, std::size_t row) {
  return (file.path.empty() ? std::string("<input>") : file.path) + ": row " + std::to_string(row);
}

int parse_label(std::string_view text, const ScoredFile& file, std::size_t row) {
  if (text == "0") return 0;
  if (text == "1") return 1;
  throw Error(ErrorCode::non_binary_label, where(file, row) + ": field '" + file.label_column + "' value '" +
                                               std::string(text) + "' is not 0 or 1");
}

double parse_score(std::string_view text, const ScoredFile& file, std::size_t row) {
  double v = 0.0;
  const char* begin = text.data();
  const char* end = text.data() + text.size();
  if (!text.empty() && *begin == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, v);
  if (text.empty() || ec != std::errc() || ptr != end)
    throw Error(ErrorCode::parse, where(file, row) + ": field '" + file.score_column + "' value '" +
                                      std::string(text) + "' is not a number");
  if (!std::isfinite(v))
    throw Error(ErrorCode::non_finite_score, where(file, row) + ": field '" + file.score_column + "' value '" +
                                                 std::string(text) + "' is not finite");
  return v;
}

void check_unique(std::unordered_set<std::string>& seen, const std::string& id, const ScoredFile& file,
                  std::size_t row) {
  if (!seen.insert(id).second)
    throw Error(ErrorCode::duplicate_id, where(file, row) + ": duplicate id '" + id + "'");
}

std::vector<ScoredRecord> read_delimited(std::istream& in, const ScoredFile& file) {
  std::string line;
  if (!std::getline(in, line))
    throw Error(ErrorCode::parse, (file.path.empty() ? std::string("<input>") : file.path) + ": missing header row");
  const auto header = split_fields(line, file.delimiter);
  auto column = [&](const std::string& name) -> std::ptrdiff_t {
    for (std::size_t i = 0; i < header.size(); ++i)
      if (header[i] == name) return static_cast<std::ptrdiff_t>(i);
    return -1;
  };
  const auto label_col = column(file.label_column);
  const auto score_col = column(file.score_column);
  const auto id_col = column(file.id_column);
  if (label_col < 0 || score_col < 0)
    throw Error(ErrorCode::parse, (file.path.empty() ? std::string("<input>") : file.path) +
                                      ": header must name columns '" + file.label_column + "' and '" +
                                      file.score_column + "'");

  std::vector<ScoredRecord> out;
  std::unordered_set<std::string> seen;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    ++row;
    const auto fields = split_fields(line, file.delimiter);
    if (fields.size() != header.size())
      throw Error(ErrorCode::parse, where(file, row) + ": expected " + std::to_string(header.size()) +
                                        " fields, found " + std::to_string(fields.size()));
    ScoredRecord r;
    r.label = parse_label(fields[static_cast<std::size_t>(label_col)], file, row);
    r.score = parse_score(fields[static_cast<std::size_t>(score_col)], file, row);
    r.id = id_col >= 0 ? fields[static_cast<std::size_t>(id_col)] : std::to_string(row);
    if (id_col >= 0) check_unique(seen, r.id, file, row);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<ScoredRecord> read_json_lines(std::istream& in, const ScoredFile& file) {
  std::vector<ScoredRecord> out;
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    ++row;
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::parse, where(file, row) + ": invalid json (" + e.what() + ")");
    }
    if (!obj.is_object()) throw Error(ErrorCode::parse, where(file, row) + ": expected a json object");

    const auto label = obj.find(file.label_column);
    if (label == obj.end()) throw Error(ErrorCode::parse, where(file, row) + ": missing field '" + file.label_column + "'");
    if (!label->is_number_integer() || (label->get<std::int64_t>() != 0 && label->get<std::int64_t>() != 1))
      throw Error(ErrorCode::non_binary_label,
                  where(file, row) + ": field '" + file.label_column + "' value " + label->dump() + " is not 0 or 1");

    const auto score = obj.find(file.score_column);
    if (score == obj.end()) throw Error(ErrorCode::parse, where(file, row) + ": missing field '" + file.score_column + "'");
    if (!score->is_number())
      throw Error(ErrorCode::parse,
                  where(file, row) + ": field '" + file.score_column + "' value " + score->dump() + " is not a number");

    ScoredRecord r;
    r.label = static_cast<int>(label->get<std::int64_t>());
    r.score = score->get<double>();
    if (!std::isfinite(r.score))
      throw Error(ErrorCode::non_finite_score, where(file, row) + ": field '" + file.score_column + "' is not finite");
    const auto id = obj.find(file.id_column);
    if (id == obj.end()) {
      r.id = std::to_string(row);
    } else {
      if (id->is_string())
        r.id = id->get<std::string>();
      else if (id->is_number_integer())
        r.id = id->dump();
      else
        throw Error(ErrorCode::parse, where(file, row) + ": field '" + file.id_column + "' must be a string or integer");
      check_unique(seen, r.id, file, row);
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

InputFormat infer_format(std::string_view path) {
  auto ends_with = [&](std::string_view suffix) {
    return path.size() >= suffix.size() && path.substr(path.size() - suffix.size()) == suffix;
  };
  return ends_with(".jsonl") || ends_with(".json") ? InputFormat::json_lines : InputFormat::delimited;
}

std::vector<ScoredRecord> read_scored(std::istream& in, const ScoredFile& file) {
  return file.format == InputFormat::json_lines ? read_json_lines(in, file) : read_delimited(in, file);
}

std::vector<ScoredRecord> load_scored(const ScoredFile& file) {
  std::ifstream in(file.path);
  if (!in) throw Error(ErrorCode::io, "cannot open '" + file.path + "' for reading");
  return read_scored(in, file);
}

void write_scored(std::ostream& out, const std::vector<ScoredRecord>& records, char delimiter) {
  out << "id" << delimiter << "score" << delimiter << "label\n";
  char buf[32];
  for (const auto& r : records) {
    std::snprintf(buf, sizeof buf, "%.17g", r.score);
    std::string id = r.id;
    if (id.find(delimiter) != std::string::npos || id.find('"') != std::string::npos) {
      std::string quoted = "\"";
      for (char c : id) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
      id = quoted + "\"";
    }
    out << id << delimiter << buf << delimiter << r.label << '\n';
  }
  if (!out) throw Error(ErrorCode::io, "failed writing scored records");
}

}  // namespace liftkit
