#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "liftkit/ranking.hpp"

namespace liftkit {

enum class InputFormat { delimited, json_lines };

// Where to find scored records and how to read them. For delimited text a
// header row is required; for json-lines each line is an object. If the id
// column is absent, records get their 1-based row number as id.
struct ScoredFile {
  std::string path;
  InputFormat format = InputFormat::delimited;
  char delimiter = ',';
  std::string label_column = "label";
  std::string score_column = "score";
  std::string id_column = "id";
};

// "jsonl"/".json" extensions select json-lines; anything else is delimited.
InputFormat infer_format(std::string_view path);

std::vector<ScoredRecord> load_scored(const ScoredFile& file);
// Reads from a stream; file.path is used only in diagnostics.
std::vector<ScoredRecord> read_scored(std::istream& in, const ScoredFile& file);

// id,score,label rows with full-precision scores, readable by load_scored.
void write_scored(std::ostream& out, const std::vector<ScoredRecord>& records, char delimiter = ',');

}  // namespace liftkit
