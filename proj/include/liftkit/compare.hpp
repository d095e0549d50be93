#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "liftkit/ranking.hpp"
#include "liftkit/ratio.hpp"

namespace liftkit {

struct ClassifierRun {
  std::string name;
  RankedTestSet ranked;
};

struct CompareEntry {
  std::size_t run = 0;  // index into the runs passed to compare_at
  Ratio cum_gains;
  Ratio lift;
  bool winner = false;
};

struct CompareTarget {
  std::int64_t n = 0;
  std::vector<CompareEntry> entries;

  // More than one run shares the best cumulative gains.
  bool tie() const;
};

// Cumulative gains and lift of every run at each target n, with the best run(s)
// flagged. Each run is evaluated on its own ranking; curves are never spliced.
std::vector<CompareTarget> compare_at(const std::vector<ClassifierRun>& runs,
                                      const std::vector<std::int64_t>& targets);

// Throws Error(label_mismatch) unless both sets have the same N and N+.
void require_same_labels(const RankedTestSet& a, const RankedTestSet& b);

// Pairs of 1-based ranks whose labels are exchanged. Pairs must be disjoint.
struct SwapSpec {
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
};

RankedTestSet apply_swaps(const RankedTestSet& ranked, const SwapSpec& swaps);

// Accuracy of "top-n positive, rest negative" over the whole set:
// (tp_n + (N - n - (N+ - tp_n))) / N.
Ratio accuracy_at(const RankedTestSet& ranked, std::int64_t n);

// Inclusive range of cutoffs n.
struct RankRange {
  std::int64_t first = 0;
  std::int64_t last = 0;

  friend bool operator==(const RankRange&, const RankRange&) = default;
};

enum class Dominance { a_dominates, b_dominates, crossing };

const char* to_string(Dominance verdict);

struct DominanceReport {
  Dominance verdict = Dominance::crossing;
  std::vector<RankRange> a_better;  // n where lift_a(n) > lift_b(n)
  std::vector<RankRange> b_better;

  // Identical lift at every n: a crossing verdict with no intervals.
  bool tied() const { return a_better.empty() && b_better.empty(); }
};

DominanceReport dominance(const ClassifierRun& a, const ClassifierRun& b);

// Reconstructed perturbations of the 24-record worked example (rank pairs
// whose labels are exchanged).
SwapSpec higher_auc_lower_lift_swaps();   // (6,8), (12,16)
SwapSpec lower_auc_higher_lift_swaps();   // (8,9), (16,19)
SwapSpec lower_auc_same_lift_swaps();     // (16,18)

}  // namespace liftkit
