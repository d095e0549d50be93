#include <doctest.h>

#include <algorithm>
#include <random>

#include "liftkit/error.hpp"
#include "liftkit/metrics.hpp"
#include "support/oracles.hpp"
#include "support/table2.hpp"

using namespace liftkit;

namespace {

// Lift straight from the printed CumGain column: (CumGain / n) / (12 / 24).
Ratio table_lift(std::int64_t n) {
  return Ratio(table2::kRows[static_cast<std::size_t>(n - 1)].cum_gain * 24, n * 12);
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::invalid_argument;
}

}  // namespace

TEST_CASE("cumulative gains follow the worked example") {
  const auto ranked = table2::ranked();
  CHECK(cum_gains(ranked, 0) == Ratio(0));
  CHECK(cum_gains(ranked, 8) == Ratio(7));
  CHECK(cum_gains(ranked, 24) == Ratio(12));
  for (const auto& row : table2::kRows) {
    CHECK(cum_gains(ranked, row.rank) == Ratio(row.cum_gain));
    CHECK(p_cum_gains(ranked, row.rank).fixed(5) == row.p_cum_gain);
    CHECK(Ratio(row.rank, 24).fixed(5) == row.fraction);
  }
  CHECK(p_cum_gains(ranked, 12).fixed(5) == "0.83333");
  CHECK(p_cum_gains(ranked, 1).fixed(5) == "0.08333");
  CHECK(p_cum_gains(ranked, 24) == Ratio(1));
  CHECK_THROWS_AS(cum_gains(ranked, 25), Error);
  CHECK_THROWS_AS(cum_gains(ranked, -1), Error);
}

TEST_CASE("lift on the worked example") {
  const auto ranked = table2::ranked();
  CHECK(lift(ranked, 12) == table_lift(12));
  CHECK(lift(ranked, 12) == Ratio(5, 3));
  CHECK(lift(ranked, 12).fixed(5) == "1.66667");
  CHECK(lift(ranked, 1) == Ratio(2));
  CHECK(lift(ranked, 24) == Ratio(1));
  for (std::int64_t n = 1; n <= 24; ++n) CHECK(lift(ranked, n) == table_lift(n));
  CHECK(code_of([&] { lift(ranked, 0); }) == ErrorCode::out_of_range);
  CHECK(code_of([&] { p_cum_gains(ranked, 0); }) == ErrorCode::out_of_range);
}

TEST_CASE("decile lift") {
  const auto ranked = table2::ranked();
  const auto d = decile_lift(ranked);
  CHECK(decile_cutoff(24, 1) == 3);
  CHECK(decile_cutoff(24, 10) == 24);
  CHECK(d[0] == Ratio(2));
  CHECK(d[9] == Ratio(1));
  for (int k = 1; k <= 10; ++k) CHECK(d[k - 1] == table_lift(decile_cutoff(24, k)));

  std::vector<ScoredRecord> all_pos;
  for (int i = 0; i < 13; ++i) all_pos.push_back({"p" + std::to_string(i), 1.0 * i, 1});
  for (const auto& v : decile_lift(rank_records(all_pos))) CHECK(v == Ratio(1));
}

TEST_CASE("decile cutoffs are nonempty and reach N") {
  for (std::int64_t total = 1; total <= 57; ++total) {
    std::int64_t prev = 0;
    for (int k = 1; k <= 10; ++k) {
      const auto n = decile_cutoff(total, k);
      CHECK(n >= 1);
      CHECK(n >= prev);
      CHECK(n * 10 >= k * total);
      CHECK((n - 1) * 10 < k * total);
      prev = n;
    }
    CHECK(prev == total);
  }
}

TEST_CASE("cumulative benefit") {
  const auto ranked = table2::ranked();
  CHECK(cum_benefit(ranked, 8, {10.0, -1.0}) == doctest::Approx(7 * 10.0 + 1 * -1.0));
  CHECK(cum_benefit(ranked, 8, {10.0, -1.0}) == 69.0);
  CHECK(cum_benefit(ranked, 0, {10.0, -1.0}) == 0.0);
  for (std::int64_t n = 0; n <= 24; ++n) CHECK(cum_benefit(ranked, n, {1.0, 0.0}) == cum_gains(ranked, n).value());
}

TEST_CASE("n-confusion matrices") {
  const auto ranked = table2::ranked();
  CHECK(n_confusion_matrix(ranked, 8) == NConfusionMatrix{8, Ratio(7), Ratio(1), 0, 0});
  CHECK(n_confusion_matrix(ranked, 24) == NConfusionMatrix{24, Ratio(12), Ratio(12), 0, 0});
  CHECK(n_confusion_matrix(ranked, 1) == NConfusionMatrix{1, Ratio(1), Ratio(0), 0, 0});
  for (std::int64_t n = 1; n <= 24; ++n) {
    const auto m = n_confusion_matrix(ranked, n);
    CHECK(m.tp + m.fp == Ratio(n));
    CHECK(m.fn == 0);
    CHECK(m.tn == 0);
    CHECK(m.tp <= Ratio(std::min<std::int64_t>(n, 12)));
  }
  CHECK_THROWS_AS(n_confusion_matrix(ranked, 0), Error);
}

TEST_CASE("ROC points") {
  const auto table = roc_points(table2::ranked());
  CHECK(table.points.front().x == 0.0);
  CHECK(table.points.back().x == 1.0);
  CHECK(table.points.back().y == 1.0);
  CHECK(table.points.size() == 25);
  // cutoff after rank 8: one negative, seven positives
  CHECK(table.points[8].x_exact == Ratio(1, 12));
  CHECK(table.points[8].y_exact == Ratio(7, 12));
  validate(table);

  const auto perfect = roc_points(RankedTestSet::from_ranked_labels(std::vector<int>{1, 1, 1, 0, 0}));
  CHECK(std::any_of(perfect.points.begin(), perfect.points.end(),
                    [](const CurvePoint& p) { return p.x == 0.0 && p.y == 1.0; }));

  const auto tied = roc_points(rank_records({{"a", 0.5, 1}, {"b", 0.5, 0}, {"c", 0.5, 1}}));
  REQUIRE(tied.points.size() == 2);
  CHECK(tied.points[0].x_exact == Ratio(0));
  CHECK(tied.points[1].x_exact == Ratio(1));
  CHECK(tied.points[1].y_exact == Ratio(1));
}

TEST_CASE("AUC on the worked example and its perturbation") {
  const auto ranked = table2::ranked();
  CHECK(auc_pairs(ranked) == Ratio(135, 144));
  CHECK(auc_wilcoxon(ranked) == Ratio(135, 144));
  CHECK(auc_pairs(ranked).fixed(3) == "0.938");

  auto labels = table2::labels();
  std::swap(labels[5], labels[7]);
  std::swap(labels[11], labels[15]);
  const auto perturbed = ranked.with_labels(labels);
  CHECK(auc_pairs(perturbed) == Ratio(137, 144));
  CHECK(auc_wilcoxon(perturbed) == Ratio(137, 144));
  CHECK(auc_pairs(perturbed).fixed(5) == "0.95139");
}

TEST_CASE("AUC edge cases") {
  CHECK(auc_pairs(rank_records({{"a", 0.3, 1}, {"b", 0.3, 0}, {"c", 0.3, 0}})) == Ratio(1, 2));
  CHECK(auc_wilcoxon(rank_records({{"a", 0.3, 1}, {"b", 0.3, 0}, {"c", 0.3, 0}})) == Ratio(1, 2));
  CHECK(auc_wilcoxon(rank_records({{"a", 0.9, 1}, {"b", 0.1, 0}})) == Ratio(1));
  CHECK(auc_pairs(rank_records({{"a", 0.9, 1}, {"b", 0.1, 0}})) == Ratio(1));
  CHECK(auc_pairs(rank_records({{"a", 0.1, 1}, {"b", 0.9, 0}})) == Ratio(0));
}

TEST_CASE("single-class sets: gains defined, ratios are errors") {
  const auto all_neg = rank_records({{"a", 0.9, 0}, {"b", 0.1, 0}});
  CHECK(cum_gains(all_neg, 2) == Ratio(0));
  CHECK(cum_benefit(all_neg, 2, {5.0, -1.0}) == -2.0);
  CHECK(code_of([&] { lift(all_neg, 1); }) == ErrorCode::undefined_ratio);
  CHECK(code_of([&] { p_cum_gains(all_neg, 1); }) == ErrorCode::undefined_ratio);
  CHECK(code_of([&] { decile_lift(all_neg); }) == ErrorCode::undefined_ratio);
  CHECK(code_of([&] { auc_pairs(all_neg); }) == ErrorCode::single_class);
  CHECK(code_of([&] { auc_wilcoxon(all_neg); }) == ErrorCode::single_class);
  CHECK(code_of([&] { roc_points(all_neg); }) == ErrorCode::single_class);
  const auto all_pos = rank_records({{"a", 0.9, 1}, {"b", 0.1, 1}});
  CHECK(code_of([&] { auc_pairs(all_pos); }) == ErrorCode::single_class);
}

TEST_CASE("AUC formulas agree with each other and with pair enumeration") {
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<std::size_t> size(2, 200);
  for (int trial = 0; trial < 300; ++trial) {
    const auto records = oracle::random_records(rng, size(rng), 0.3);
    for (auto policy : {TiePolicy::input_order, TiePolicy::id_order, TiePolicy::expected_value}) {
      const auto ranked = rank_records(records, policy);
      const Ratio pairs = auc_pairs(ranked);
      CHECK(pairs == auc_wilcoxon(ranked));
      CHECK(pairs == oracle::auc_by_pairs(records));
    }
  }
}

TEST_CASE("gains and lift invariants on random rankings") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const auto records = oracle::random_records(rng, 2 + trial % 90, 0.3);
    for (auto policy : {TiePolicy::input_order, TiePolicy::id_order, TiePolicy::expected_value}) {
      const auto ranked = rank_records(records, policy);
      const auto total = ranked.size();
      const auto labels = ranked.labels();
      for (std::int64_t n = 0; n < total; ++n) {
        const Ratio step = cum_gains(ranked, n + 1) - cum_gains(ranked, n);
        CHECK(step >= Ratio(0));
        CHECK(step <= Ratio(1));
        if (policy != TiePolicy::expected_value) {
          CHECK(step.is_integer());
          CHECK(cum_gains(ranked, n + 1) == Ratio(oracle::prefix_sum(labels, n + 1)));
        }
      }
      CHECK(cum_gains(ranked, total) == Ratio(ranked.positives()));
      CHECK(p_cum_gains(ranked, total) == Ratio(1));
      CHECK(lift(ranked, total) == Ratio(1));
      for (std::int64_t n = 1; n <= total; ++n) {
        // lift = p-CumGains / (n/N), exactly
        CHECK(lift(ranked, n) == p_cum_gains(ranked, n) / Ratio(n, total));
        // p-CumGains is the sensitivity of "top-n positive"
        const auto m = n_confusion_matrix(ranked, n);
        CHECK(p_cum_gains(ranked, n) == m.tp / Ratio(ranked.positives()));
        CHECK(m.tp + m.fp == Ratio(n));
        CHECK(cum_benefit(ranked, n, {1.0, 0.0}) == cum_gains(ranked, n).value());
      }
    }
  }
}

TEST_CASE("reordering labels below the cutoff leaves gains and lift unchanged") {
  std::mt19937_64 rng(99);
  bool auc_changed = false;
  for (int trial = 0; trial < 200; ++trial) {
    const auto base = RankedTestSet::from_ranked_labels([&] {
      std::vector<int> l(30);
      std::bernoulli_distribution coin(0.4);
      for (auto& v : l) v = coin(rng);
      l[0] = 1;
      l[1] = 0;
      return l;
    }());
    std::uniform_int_distribution<std::int64_t> cut(1, 29);
    const auto n = cut(rng);
    auto labels = base.labels();
    std::shuffle(labels.begin() + n, labels.end(), rng);
    const auto permuted = base.with_labels(labels);
    for (std::int64_t m = 1; m <= n; ++m) {
      CHECK(cum_gains(permuted, m) == cum_gains(base, m));
      CHECK(p_cum_gains(permuted, m) == p_cum_gains(base, m));
      CHECK(lift(permuted, m) == lift(base, m));
    }
    auc_changed = auc_changed || auc_pairs(permuted) != auc_pairs(base);
  }
  CHECK(auc_changed);
}

TEST_CASE("a perfect ranking maximizes every measure") {
  for (int npos = 1; npos < 12; ++npos) {
    std::vector<int> labels(12, 0);
    std::fill(labels.begin(), labels.begin() + npos, 1);
    const auto ranked = RankedTestSet::from_ranked_labels(labels);
    CHECK(auc_pairs(ranked) == Ratio(1));
    CHECK(p_cum_gains(ranked, npos) == Ratio(1));
    for (std::int64_t n = 1; n <= npos; ++n) CHECK(lift(ranked, n) == Ratio(12, npos));
  }
}

TEST_CASE("random-targeting baseline uses the set's own base rate") {
  const auto ranked = table2::ranked();
  CHECK(random_targeting(ranked, 12) == Ratio(6));
  CHECK(random_targeting(ranked, 24) == Ratio(12));
  const auto base = baseline_gains_series(ranked, XKind::fraction);
  CHECK(base.points.front().y == 0.0);
  CHECK(base.points.back().y == 1.0);
  for (const auto& p : baseline_lift_series(ranked, XKind::count).points) CHECK(p.y == 1.0);
}

TEST_CASE("chart series are well formed") {
  const auto ranked = table2::ranked();
  for (const auto& s : {gains_series(ranked, XKind::count), gains_series(ranked, XKind::fraction),
                        lift_series(ranked, XKind::count), lift_series(ranked, XKind::fraction),
                        benefit_series(ranked, {2.0, -1.0}), decile_series(ranked), roc_points(ranked)})
    CHECK_NOTHROW(validate(s));
  const auto g = gains_series(ranked, XKind::fraction);
  CHECK(g.points.size() == 24);
  CHECK(g.points[11].x == 0.5);
  CHECK(g.points[11].y_exact->fixed(5) == "0.83333");
  CHECK_THROWS_AS(gains_series(ranked, XKind::fpr), Error);
}
