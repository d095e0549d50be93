#include "liftkit/compare.hpp"

#include <algorithm>
#include <set>

#include "liftkit/error.hpp"
#include "liftkit/metrics.hpp"

namespace liftkit {

bool CompareTarget::tie() const {
  return std::count_if(entries.begin(), entries.end(), [](const CompareEntry& e) { return e.winner; }) > 1;
}

void require_same_labels(const RankedTestSet& a, const RankedTestSet& b) {
  if (a.size() != b.size() || a.positives() != b.positives())
    throw Error(ErrorCode::label_mismatch,
                "runs disagree on the test set: N=" + std::to_string(a.size()) + ", N+=" +
                    std::to_string(a.positives()) + " vs N=" + std::to_string(b.size()) +
                    ", N+=" + std::to_string(b.positives()));
}

std::vector<CompareTarget> compare_at(const std::vector<ClassifierRun>& runs,
                                      const std::vector<std::int64_t>& targets) {
  if (runs.size() < 2) throw Error(ErrorCode::invalid_argument, "comparison needs at least two runs");
  if (targets.empty()) throw Error(ErrorCode::invalid_argument, "comparison needs at least one target n");
  for (std::size_t i = 1; i < runs.size(); ++i) require_same_labels(runs[0].ranked, runs[i].ranked);

  std::vector<CompareTarget> out;
  out.reserve(targets.size());
  for (std::int64_t n : targets) {
    CompareTarget target{n, {}};
    Ratio best;
    for (std::size_t r = 0; r < runs.size(); ++r) {
      CompareEntry e{r, cum_gains(runs[r].ranked, n), lift(runs[r].ranked, n), false};
      if (r == 0 || e.cum_gains > best) best = e.cum_gains;
      target.entries.push_back(e);
    }
    for (auto& e : target.entries) e.winner = e.cum_gains == best;
    out.push_back(std::move(target));
  }
  return out;
}

RankedTestSet apply_swaps(const RankedTestSet& ranked, const SwapSpec& swaps) {
  std::set<std::int64_t> used;
  std::vector<int> labels = ranked.labels();
  for (const auto& [a, b] : swaps.pairs) {
    for (std::int64_t r : {a, b}) {
      if (r < 1 || r > ranked.size())
        throw Error(ErrorCode::invalid_swap,
                    "swap rank " + std::to_string(r) + " outside 1.." + std::to_string(ranked.size()));
      if (!used.insert(r).second)
        throw Error(ErrorCode::invalid_swap, "rank " + std::to_string(r) + " appears in more than one swap");
    }
    std::swap(labels[static_cast<std::size_t>(a - 1)], labels[static_cast<std::size_t>(b - 1)]);
  }
  return ranked.with_labels(labels);
}

Ratio accuracy_at(const RankedTestSet& ranked, std::int64_t n) {
  if (n < 1 || n > ranked.size())
    throw Error(ErrorCode::out_of_range,
                "cutoff n=" + std::to_string(n) + " outside 1.." + std::to_string(ranked.size()));
  const Ratio tp = ranked.positives_in_top(n);
  const Ratio tn = Ratio(ranked.size() - n - ranked.positives()) + tp;
  return (tp + tn) / Ratio(ranked.size());
}

const char* to_string(Dominance verdict) {
  switch (verdict) {
    case Dominance::a_dominates: return "a-dominates";
    case Dominance::b_dominates: return "b-dominates";
    case Dominance::crossing: return "crossing";
  }
  return "crossing";
}

DominanceReport dominance(const ClassifierRun& a, const ClassifierRun& b) {
  require_same_labels(a.ranked, b.ranked);
  DominanceReport out;
  auto extend = [](std::vector<RankRange>& ranges, std::int64_t n) {
    if (!ranges.empty() && ranges.back().last == n - 1)
      ranges.back().last = n;
    else
      ranges.push_back({n, n});
  };
  for (std::int64_t n = 1; n <= a.ranked.size(); ++n) {
    const auto order = lift(a.ranked, n) <=> lift(b.ranked, n);
    if (order > 0) extend(out.a_better, n);
    if (order < 0) extend(out.b_better, n);
  }
  if (!out.a_better.empty() && out.b_better.empty())
    out.verdict = Dominance::a_dominates;
  else if (out.a_better.empty() && !out.b_better.empty())
    out.verdict = Dominance::b_dominates;
  else
    out.verdict = Dominance::crossing;
  return out;
}

SwapSpec higher_auc_lower_lift_swaps() { return {{{6, 8}, {12, 16}}}; }
SwapSpec lower_auc_higher_lift_swaps() { return {{{8, 9}, {16, 19}}}; }
SwapSpec lower_auc_same_lift_swaps() { return {{{16, 18}}}; }

}  // namespace liftkit
