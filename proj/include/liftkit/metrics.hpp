#pragma once

#include <array>
#include <cstdint>

#include "liftkit/curve.hpp"
#include "liftkit/ranking.hpp"
#include "liftkit/ratio.hpp"

namespace liftkit {

// Per-record net benefits: q_tp for each targeted positive, q_fp (usually
// negative) for each targeted negative.
struct CostSpec {
  double q_tp = 1.0;
  double q_fp = 0.0;
};

// Confusion matrix when the top-n are all predicted positive. The
// predicted-negative column is identically zero. tp/fp are fractional only
// under the expected-value tie policy.
struct NConfusionMatrix {
  std::int64_t n = 0;
  Ratio tp;
  Ratio fp;
  std::int64_t fn = 0;
  std::int64_t tn = 0;

  friend bool operator==(const NConfusionMatrix&, const NConfusionMatrix&) = default;
};

// Positives among the top-n. Defined for 0 <= n <= N.
Ratio cum_gains(const RankedTestSet& ranked, std::int64_t n);

// cum_gains(n) / N+. Requires 1 <= n <= N and N+ > 0.
Ratio p_cum_gains(const RankedTestSet& ranked, std::int64_t n);

// (TP_n / n) / (N+ / N). Requires 1 <= n <= N and N+ > 0; lift(N) == 1.
Ratio lift(const RankedTestSet& ranked, std::int64_t n);

// Lift at n_k = ceil(k * N / 10), k = 1..10.
std::array<Ratio, 10> decile_lift(const RankedTestSet& ranked);
std::int64_t decile_cutoff(std::int64_t total, int decile);

// TP_n * q_tp + FP_n * q_fp. Defined for 0 <= n <= N.
double cum_benefit(const RankedTestSet& ranked, std::int64_t n, const CostSpec& costs);

NConfusionMatrix n_confusion_matrix(const RankedTestSet& ranked, std::int64_t n);

// Expected positives among n records drawn at random: n * N+ / N.
Ratio random_targeting(const RankedTestSet& ranked, std::int64_t n);

// (FPR, TPR) after each tie group, starting at (0,0) and ending at (1,1).
CurveSeries roc_points(const RankedTestSet& ranked);

// Pair-counting AUC: concordant positive/negative pairs count 1, pairs with
// equal scores count 1/2. Ties are decided on scores, never on the
// tie-broken order.
Ratio auc_pairs(const RankedTestSet& ranked);

// Rank-sum AUC: U / (N+ N-) with ascending midranks for tied scores.
Ratio auc_wilcoxon(const RankedTestSet& ranked);

// Chart series. Gains and lift series have one point per n = 1..N.
CurveSeries gains_series(const RankedTestSet& ranked, XKind x_kind);
CurveSeries lift_series(const RankedTestSet& ranked, XKind x_kind);
CurveSeries decile_series(const RankedTestSet& ranked);
CurveSeries benefit_series(const RankedTestSet& ranked, const CostSpec& costs);
// Random-targeting reference matching gains_series/lift_series for the same x_kind.
CurveSeries baseline_gains_series(const RankedTestSet& ranked, XKind x_kind);
CurveSeries baseline_lift_series(const RankedTestSet& ranked, XKind x_kind);

}  // namespace liftkit
