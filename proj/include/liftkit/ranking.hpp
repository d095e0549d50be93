#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "liftkit/ratio.hpp"

namespace liftkit {

struct ScoredRecord {
  std::string id;
  double score = 0.0;
  int label = 0;  // 0 or 1

  friend bool operator==(const ScoredRecord&, const ScoredRecord&) = default;
};

// How records with equal scores are ordered, and how gains are counted when a
// cutoff falls inside a tie group.
enum class TiePolicy {
  input_order,     // stable: equal scores keep their input order
  id_order,        // equal scores sorted ascending by id
  expected_value,  // a partial tie group contributes its positive fraction per record
};

const char* to_string(TiePolicy policy);
TiePolicy parse_tie_policy(std::string_view text);

// Half-open range [begin, end) of 0-based positions sharing one score.
struct TieGroup {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::int64_t positives = 0;

  std::size_t size() const noexcept { return end - begin; }
};

// Records in descending-score order (rank 1 first) with class counts and tie
// groups cached. Immutable after construction, so it can be shared across
// threads freely.
class RankedTestSet {
 public:
  const std::vector<ScoredRecord>& records() const noexcept { return records_; }
  const std::vector<TieGroup>& tie_groups() const noexcept { return groups_; }
  TiePolicy tie_policy() const noexcept { return policy_; }

  std::int64_t size() const noexcept { return static_cast<std::int64_t>(records_.size()); }
  std::int64_t positives() const noexcept { return n_pos_; }
  std::int64_t negatives() const noexcept { return size() - n_pos_; }

  // 1-based rank access.
  const ScoredRecord& at_rank(std::int64_t rank) const;
  std::vector<int> labels() const;

  // Positives among the top-n under the tie policy. Integral for the discrete
  // policies; under expected_value a tie group straddling the cutoff adds
  // (records of the group inside the prefix) * (group positives / group size).
  // Requires 0 <= n <= size().
  Ratio positives_in_top(std::int64_t n) const;

  // Same records and order with labels replaced position by position.
  // The replacement must keep the label multiset (same N+).
  RankedTestSet with_labels(std::span<const int> labels) const;

  // Builds a set from a label sequence already in rank order; scores are
  // N, N-1, ..., 1 (strictly decreasing) and ids are "r1".."rN".
  static RankedTestSet from_ranked_labels(std::span<const int> labels,
                                          TiePolicy policy = TiePolicy::input_order);

 private:
  friend RankedTestSet rank_records(std::vector<ScoredRecord> records, TiePolicy policy);

  void index();

  std::vector<ScoredRecord> records_;
  std::vector<TieGroup> groups_;
  std::vector<std::size_t> group_of_;      // position -> index into groups_
  std::vector<std::int64_t> prefix_pos_;   // prefix_pos_[n] = labels summed over positions < n
  std::int64_t n_pos_ = 0;
  TiePolicy policy_ = TiePolicy::input_order;
};

// Validates and sorts records by descending score. Rejects empty input,
// labels outside {0,1}, non-finite scores, and duplicate ids, each with its
// own ErrorCode.
RankedTestSet rank_records(std::vector<ScoredRecord> records,
                           TiePolicy policy = TiePolicy::input_order);

}  // namespace liftkit
