#include "liftkit/metrics.hpp"

#include <string>

#include "liftkit/error.hpp"

namespace liftkit {
namespace {

void require_positives(const RankedTestSet& ranked, const char* what) {
  if (ranked.positives() == 0)
    throw Error(ErrorCode::undefined_ratio, std::string(what) + " is undefined when the set has no positives");
}

void require_both_classes(const RankedTestSet& ranked, const char* what) {
  if (ranked.positives() == 0 || ranked.negatives() == 0)
    throw Error(ErrorCode::single_class, std::string(what) + " needs both positive and negative records");
}

void require_cutoff(const RankedTestSet& ranked, std::int64_t n, std::int64_t lowest) {
  if (n < lowest || n > ranked.size())
    throw Error(ErrorCode::out_of_range, "cutoff n=" + std::to_string(n) + " outside " +
                                             std::to_string(lowest) + ".." + std::to_string(ranked.size()));
}

Ratio x_for(const RankedTestSet& ranked, std::int64_t n, XKind kind) {
  switch (kind) {
    case XKind::count: return Ratio(n);
    case XKind::fraction: return Ratio(n, ranked.size());
    case XKind::fpr: break;
  }
  throw Error(ErrorCode::incompatible_kind, "gains and lift series use count or fraction x values");
}

}  // namespace

Ratio cum_gains(const RankedTestSet& ranked, std::int64_t n) {
  require_cutoff(ranked, n, 0);
  return ranked.positives_in_top(n);
}

Ratio p_cum_gains(const RankedTestSet& ranked, std::int64_t n) {
  require_cutoff(ranked, n, 1);
  require_positives(ranked, "p-CumGains");
  return ranked.positives_in_top(n) / Ratio(ranked.positives());
}

Ratio lift(const RankedTestSet& ranked, std::int64_t n) {
  require_cutoff(ranked, n, 1);
  require_positives(ranked, "lift");
  const Ratio tp = ranked.positives_in_top(n);
  return Ratio::from_wide(static_cast<__int128>(tp.num()) * ranked.size(),
                          static_cast<__int128>(tp.den()) * n * ranked.positives());
}

std::int64_t decile_cutoff(std::int64_t total, int decile) {
  return (decile * total + 9) / 10;
}

std::array<Ratio, 10> decile_lift(const RankedTestSet& ranked) {
  require_positives(ranked, "decile lift");
  std::array<Ratio, 10> out;
  for (int k = 1; k <= 10; ++k) out[k - 1] = lift(ranked, decile_cutoff(ranked.size(), k));
  return out;
}

double cum_benefit(const RankedTestSet& ranked, std::int64_t n, const CostSpec& costs) {
  require_cutoff(ranked, n, 0);
  const Ratio tp = ranked.positives_in_top(n);
  const Ratio fp = Ratio(n) - tp;
  return tp.value() * costs.q_tp + fp.value() * costs.q_fp;
}

NConfusionMatrix n_confusion_matrix(const RankedTestSet& ranked, std::int64_t n) {
  require_cutoff(ranked, n, 1);
  const Ratio tp = ranked.positives_in_top(n);
  return {n, tp, Ratio(n) - tp, 0, 0};
}

Ratio random_targeting(const RankedTestSet& ranked, std::int64_t n) {
  require_cutoff(ranked, n, 0);
  return Ratio::from_wide(static_cast<__int128>(n) * ranked.positives(), ranked.size());
}

CurveSeries roc_points(const RankedTestSet& ranked) {
  require_both_classes(ranked, "ROC");
  CurveSeries out{"roc", XKind::fpr, {}};
  out.points.push_back(CurvePoint::exact(Ratio(0), Ratio(0)));
  std::int64_t tp = 0;
  std::int64_t fp = 0;
  for (const TieGroup& g : ranked.tie_groups()) {
    tp += g.positives;
    fp += static_cast<std::int64_t>(g.size()) - g.positives;
    out.points.push_back(
        CurvePoint::exact(Ratio(fp, ranked.negatives()), Ratio(tp, ranked.positives())));
  }
  // The last tie group always lands on (1,1), so no explicit suffix is needed.
  return out;
}

Ratio auc_pairs(const RankedTestSet& ranked) {
  require_both_classes(ranked, "AUC");
  // Counted in half-pairs so ties stay integral.
  __int128 half_pairs = 0;
  std::int64_t negatives_above = 0;
  for (const TieGroup& g : ranked.tie_groups()) {
    const std::int64_t group_neg = static_cast<std::int64_t>(g.size()) - g.positives;
    const std::int64_t negatives_below = ranked.negatives() - negatives_above - group_neg;
    half_pairs += 2 * static_cast<__int128>(g.positives) * negatives_below;
    half_pairs += static_cast<__int128>(g.positives) * group_neg;
    negatives_above += group_neg;
  }
  return Ratio::from_wide(half_pairs, 2 * static_cast<__int128>(ranked.positives()) * ranked.negatives());
}

Ratio auc_wilcoxon(const RankedTestSet& ranked) {
  require_both_classes(ranked, "AUC");
  const __int128 total = ranked.size();
  // Twice the rank sum of positives; ascending ranks, so descending position
  // i has rank N - i and a tie group [b, e) shares midrank (2N - b - e + 1) / 2.
  __int128 rank_sum2 = 0;
  for (const TieGroup& g : ranked.tie_groups()) {
    const __int128 b = static_cast<__int128>(g.begin);
    const __int128 e = static_cast<__int128>(g.end);
    rank_sum2 += static_cast<__int128>(g.positives) * (2 * total - b - e + 1);
  }
  const __int128 npos = ranked.positives();
  const __int128 u2 = rank_sum2 - npos * (npos + 1);
  return Ratio::from_wide(u2, 2 * npos * ranked.negatives());
}

CurveSeries gains_series(const RankedTestSet& ranked, XKind x_kind) {
  CurveSeries out;
  out.x_kind = x_kind;
  out.name = x_kind == XKind::count ? "cum_gains" : "p_cum_gains";
  for (std::int64_t n = 1; n <= ranked.size(); ++n) {
    const Ratio y = x_kind == XKind::count ? cum_gains(ranked, n) : p_cum_gains(ranked, n);
    out.points.push_back(CurvePoint::exact(x_for(ranked, n, x_kind), y));
  }
  return out;
}

CurveSeries lift_series(const RankedTestSet& ranked, XKind x_kind) {
  CurveSeries out{"lift", x_kind, {}};
  for (std::int64_t n = 1; n <= ranked.size(); ++n)
    out.points.push_back(CurvePoint::exact(x_for(ranked, n, x_kind), lift(ranked, n)));
  return out;
}

CurveSeries decile_series(const RankedTestSet& ranked) {
  CurveSeries out{"decile_lift", XKind::fraction, {}};
  const auto deciles = decile_lift(ranked);
  for (int k = 1; k <= 10; ++k) out.points.push_back(CurvePoint::exact(Ratio(k, 10), deciles[k - 1]));
  return out;
}

CurveSeries benefit_series(const RankedTestSet& ranked, const CostSpec& costs) {
  CurveSeries out{"cum_benefit", XKind::count, {}};
  for (std::int64_t n = 1; n <= ranked.size(); ++n) {
    CurvePoint p;
    p.x = static_cast<double>(n);
    p.x_exact = Ratio(n);
    p.y = cum_benefit(ranked, n, costs);
    out.points.push_back(p);
  }
  return out;
}

CurveSeries baseline_gains_series(const RankedTestSet& ranked, XKind x_kind) {
  CurveSeries out{"random_targeting", x_kind, {}};
  for (std::int64_t n = 0; n <= ranked.size(); ++n) {
    const Ratio y = x_kind == XKind::count ? random_targeting(ranked, n) : Ratio(n, ranked.size());
    out.points.push_back(CurvePoint::exact(x_for(ranked, n, x_kind), y));
  }
  return out;
}

CurveSeries baseline_lift_series(const RankedTestSet& ranked, XKind x_kind) {
  CurveSeries out{"random_targeting", x_kind, {}};
  for (std::int64_t n = 1; n <= ranked.size(); ++n)
    out.points.push_back(CurvePoint::exact(x_for(ranked, n, x_kind), Ratio(1)));
  return out;
}

}  // namespace liftkit
