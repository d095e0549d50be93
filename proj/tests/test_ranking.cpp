#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "liftkit/error.hpp"
#include "liftkit/ranking.hpp"
#include "support/oracles.hpp"
#include "support/table2.hpp"

using namespace liftkit;

namespace {

ErrorCode error_of(std::vector<ScoredRecord> records) {
  try {
    rank_records(std::move(records));
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected rank_records to throw");
  return ErrorCode::invalid_argument;
}

std::vector<std::string> ids(const RankedTestSet& r) {
  std::vector<std::string> out;
  for (const auto& rec : r.records()) out.push_back(rec.id);
  return out;
}

}  // namespace

TEST_CASE("records are ordered by descending score") {
  auto ranked = rank_records({{"a", 0.9, 1}, {"b", 0.1, 0}, {"c", 0.5, 1}});
  CHECK(ids(ranked) == std::vector<std::string>{"a", "c", "b"});
  CHECK(ranked.size() == 3);
  CHECK(ranked.positives() == 2);
  CHECK(ranked.negatives() == 1);
}

TEST_CASE("id-order policy sorts tied scores by id") {
  auto ranked = rank_records({{"b", 0.5, 1}, {"a", 0.5, 0}, {"c", 0.5, 1}}, TiePolicy::id_order);
  CHECK(ids(ranked) == std::vector<std::string>{"a", "b", "c"});
}

TEST_CASE("input-order policy keeps tied records in input order") {
  auto ranked = rank_records({{"b", 0.5, 1}, {"z", 0.7, 0}, {"a", 0.5, 0}});
  CHECK(ids(ranked) == std::vector<std::string>{"z", "b", "a"});
}

TEST_CASE("ranking the worked example reproduces its label column") {
  const auto ranked = table2::ranked();
  CHECK(ranked.labels() == table2::labels());
  CHECK(ranked.positives() == 12);
  CHECK(ranked.negatives() == 12);
}

TEST_CASE("each invalid input has its own diagnostic") {
  CHECK(error_of({}) == ErrorCode::empty_input);
  CHECK(error_of({{"a", 0.5, 2}}) == ErrorCode::non_binary_label);
  CHECK(error_of({{"a", 0.5, 1}, {"a", 0.4, 0}}) == ErrorCode::duplicate_id);
  CHECK(error_of({{"a", std::numeric_limits<double>::quiet_NaN(), 1}}) == ErrorCode::non_finite_score);
  CHECK(error_of({{"a", std::numeric_limits<double>::infinity(), 1}}) == ErrorCode::non_finite_score);
}

TEST_CASE("id-order ranking is invariant to input shuffles") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    auto records = oracle::random_records(rng, 40, 0.5);
    const auto first = rank_records(records, TiePolicy::id_order);
    std::shuffle(records.begin(), records.end(), rng);
    const auto second = rank_records(records, TiePolicy::id_order);
    CHECK(first.records() == second.records());
    // re-ranking an already ranked list is a no-op
    CHECK(rank_records(first.records(), TiePolicy::id_order).records() == first.records());
  }
}

TEST_CASE("ranked-set invariants hold on random inputs") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto ranked = rank_records(oracle::random_records(rng, 1 + trial % 60, 0.3));
    const auto& recs = ranked.records();
    for (std::size_t i = 1; i < recs.size(); ++i) CHECK(recs[i - 1].score >= recs[i].score);
    std::int64_t pos = 0;
    for (const auto& r : recs) pos += r.label;
    CHECK(ranked.positives() == pos);
    CHECK(ranked.positives() + ranked.negatives() == ranked.size());
    std::size_t covered = 0;
    for (const auto& g : ranked.tie_groups()) {
      CHECK(g.begin == covered);
      covered = g.end;
    }
    CHECK(covered == recs.size());
  }
}

TEST_CASE("expected-value policy counts partial tie groups fractionally") {
  // one tie group of four records, two of them positive
  const std::vector<ScoredRecord> records{{"a", 0.5, 1}, {"b", 0.5, 0}, {"c", 0.5, 1}, {"d", 0.5, 0}, {"e", 0.1, 1}};
  const auto ranked = rank_records(records, TiePolicy::expected_value);
  CHECK(ranked.positives_in_top(0) == Ratio(0));
  CHECK(ranked.positives_in_top(1) == Ratio(1, 2));
  CHECK(ranked.positives_in_top(2) == Ratio(1));
  CHECK(ranked.positives_in_top(3) == Ratio(3, 2));
  CHECK(ranked.positives_in_top(4) == Ratio(2));
  CHECK(ranked.positives_in_top(5) == Ratio(3));
}

TEST_CASE("expected-value gains match the average over tie-group orderings") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    // coarse scores make tie groups of up to ~8 records
    std::vector<ScoredRecord> records;
    std::uniform_int_distribution<int> score(0, 4), label(0, 1);
    for (int i = 0; i < 18; ++i) records.push_back({"k" + std::to_string(i), score(rng) / 4.0, label(rng)});
    const auto ranked = rank_records(records, TiePolicy::expected_value);
    for (std::int64_t n = 0; n <= ranked.size(); ++n) {
      bool small_group = true;
      if (n > 0 && n < ranked.size()) {
        for (const auto& g : ranked.tie_groups())
          if (g.begin < static_cast<std::size_t>(n) && g.end > static_cast<std::size_t>(n) && g.size() > 9)
            small_group = false;
      }
      if (!small_group) continue;
      CHECK(ranked.positives_in_top(n) == oracle::expected_gains(records, n));
    }
  }
}

TEST_CASE("with_labels keeps order and rejects a changed positive count") {
  const auto ranked = table2::ranked();
  auto labels = table2::labels();
  std::swap(labels[0], labels[23]);
  const auto swapped = ranked.with_labels(labels);
  CHECK(swapped.labels() == labels);
  CHECK(swapped.records()[0].score == ranked.records()[0].score);
  labels[0] = 1;
  CHECK_THROWS_AS(ranked.with_labels(labels), Error);
}

TEST_CASE("at_rank bounds") {
  const auto ranked = table2::ranked();
  CHECK(ranked.at_rank(1).id == "r1");
  CHECK(ranked.at_rank(24).id == "r24");
  CHECK_THROWS_AS(ranked.at_rank(0), Error);
  CHECK_THROWS_AS(ranked.at_rank(25), Error);
}

TEST_CASE("tie policy names round-trip") {
  for (auto p : {TiePolicy::input_order, TiePolicy::id_order, TiePolicy::expected_value})
    CHECK(parse_tie_policy(to_string(p)) == p);
  CHECK_THROWS_AS(parse_tie_policy("random"), Error);
}
