#include "liftkit/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "liftkit/error.hpp"

namespace liftkit {

const char* to_string(TiePolicy policy) {
  switch (policy) {
    case TiePolicy::input_order: return "input";
    case TiePolicy::id_order: return "id";
    case TiePolicy::expected_value: return "expected";
  }
  return "input";
}

TiePolicy parse_tie_policy(std::string_view text) {
  if (text == "input" || text == "input-order") return TiePolicy::input_order;
  if (text == "id" || text == "id-order") return TiePolicy::id_order;
  if (text == "expected" || text == "expected-value") return TiePolicy::expected_value;
  throw Error(ErrorCode::invalid_argument,
              "unknown tie policy '" + std::string(text) + "' (expected input, id, or expected)");
}

RankedTestSet rank_records(std::vector<ScoredRecord> records, TiePolicy policy) {
  if (records.empty()) throw Error(ErrorCode::empty_input, "no records to rank");

  std::unordered_set<std::string_view> seen;
  seen.reserve(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    if (r.label != 0 && r.label != 1)
      throw Error(ErrorCode::non_binary_label, "record '" + r.id + "' (position " +
                                                   std::to_string(i + 1) + ") has label " +
                                                   std::to_string(r.label) + "; expected 0 or 1");
    if (!std::isfinite(r.score))
      throw Error(ErrorCode::non_finite_score,
                  "record '" + r.id + "' (position " + std::to_string(i + 1) + ") has a non-finite score");
    if (!seen.insert(r.id).second)
      throw Error(ErrorCode::duplicate_id, "duplicate record id '" + r.id + "'");
  }

  if (policy == TiePolicy::id_order) {
    std::sort(records.begin(), records.end(), [](const ScoredRecord& a, const ScoredRecord& b) {
      if (a.score != b.score) return a.score > b.score;
      return a.id < b.id;
    });
  } else {
    std::stable_sort(records.begin(), records.end(),
                     [](const ScoredRecord& a, const ScoredRecord& b) { return a.score > b.score; });
  }

  RankedTestSet out;
  out.records_ = std::move(records);
  out.policy_ = policy;
  out.index();
  return out;
}

void RankedTestSet::index() {
  const std::size_t n = records_.size();
  prefix_pos_.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) prefix_pos_[i + 1] = prefix_pos_[i] + records_[i].label;
  n_pos_ = prefix_pos_[n];

  groups_.clear();
  group_of_.assign(n, 0);
  std::size_t begin = 0;
  while (begin < n) {
    std::size_t end = begin + 1;
    while (end < n && records_[end].score == records_[begin].score) ++end;
    for (std::size_t i = begin; i < end; ++i) group_of_[i] = groups_.size();
    groups_.push_back({begin, end, prefix_pos_[end] - prefix_pos_[begin]});
    begin = end;
  }
}

const ScoredRecord& RankedTestSet::at_rank(std::int64_t rank) const {
  if (rank < 1 || rank > size())
    throw Error(ErrorCode::out_of_range,
                "rank " + std::to_string(rank) + " outside 1.." + std::to_string(size()));
  return records_[static_cast<std::size_t>(rank - 1)];
}

std::vector<int> RankedTestSet::labels() const {
  std::vector<int> out;
  out.reserve(records_.size());
  for (const auto& r : records_) out.push_back(r.label);
  return out;
}

Ratio RankedTestSet::positives_in_top(std::int64_t n) const {
  if (n < 0 || n > size())
    throw Error(ErrorCode::out_of_range,
                "cutoff n=" + std::to_string(n) + " outside 0.." + std::to_string(size()));
  const auto un = static_cast<std::size_t>(n);
  if (policy_ != TiePolicy::expected_value || n == 0) return Ratio(prefix_pos_[un]);

  const TieGroup& g = groups_[group_of_[un - 1]];
  if (g.end == un) return Ratio(prefix_pos_[un]);
  const auto inside = static_cast<std::int64_t>(un - g.begin);
  return Ratio(prefix_pos_[g.begin]) +
         Ratio(inside * g.positives, static_cast<std::int64_t>(g.size()));
}

RankedTestSet RankedTestSet::with_labels(std::span<const int> labels) const {
  if (labels.size() != records_.size())
    throw Error(ErrorCode::label_mismatch, "label sequence length differs from the ranked set");
  RankedTestSet out = *this;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] != 0 && labels[i] != 1)
      throw Error(ErrorCode::non_binary_label, "label at rank " + std::to_string(i + 1) + " is not 0 or 1");
    out.records_[i].label = labels[i];
  }
  out.index();
  if (out.n_pos_ != n_pos_)
    throw Error(ErrorCode::label_mismatch, "replacement labels change the number of positives");
  return out;
}

RankedTestSet RankedTestSet::from_ranked_labels(std::span<const int> labels, TiePolicy policy) {
  std::vector<ScoredRecord> records;
  records.reserve(labels.size());
  const auto n = static_cast<double>(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i)
    records.push_back({"r" + std::to_string(i + 1), n - static_cast<double>(i), labels[i]});
  return rank_records(std::move(records), policy);
}

}  // namespace liftkit
