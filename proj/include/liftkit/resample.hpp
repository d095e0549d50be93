#pragma once

#include <cstdint>
#include <vector>

#include "liftkit/ranking.hpp"
#include "liftkit/ratio.hpp"

namespace liftkit {

// Separation (in standard deviations of the unit-variance score noise) at
// which synthetic_scorer produces AUC close to 0.9. Pinned from a bisection
// against auc_pairs on 10k records; see the resample tests.
inline constexpr double kSeparationForAuc90 = 1.8124;

// Positive scores ~ Normal(separation, 1), negative scores ~ Normal(0, 1),
// records shuffled. separation = 0 gives a random classifier.
std::vector<ScoredRecord> synthetic_scorer(std::int64_t n_pos, std::int64_t n_neg, double separation,
                                           std::uint64_t seed);

// round(rate * size), halves rounded up.
std::int64_t stratified_positive_count(double rate, std::int64_t size);

// Exactly stratified_positive_count(rate, size) positives and the rest
// negatives, each drawn uniformly without replacement from its class, then
// shuffled. Deterministic in seed. rate must lie strictly inside (0, 1).
std::vector<ScoredRecord> stratified_sample(const std::vector<ScoredRecord>& pool, double rate,
                                            std::int64_t size, std::uint64_t seed);

struct ResamplePlan {
  std::vector<double> target_rates;
  std::int64_t replicate_count = 50;
  std::int64_t sample_size = 5000;
  std::uint64_t seed = 0;
  int grid_points = 100;  // fractions k / grid_points, k = 1..grid_points
  unsigned threads = 0;   // 0 = hardware concurrency
  TiePolicy tie_policy = TiePolicy::input_order;
};

struct Band {
  double mean = 0.0;
  double min = 0.0;
  double max = 0.0;
};

struct GridPoint {
  Ratio fraction;
  std::int64_t n = 0;  // ceil(fraction * sample_size)
  Band p_cum_gains;
  Band lift;
};

struct RateSummary {
  double target_rate = 0.0;
  std::int64_t positives = 0;  // per sample
  double realized_rate = 0.0;
  std::int64_t replicates = 0;
  Band auc;
  std::vector<GridPoint> grid;
};

struct ResampleSummary {
  std::int64_t sample_size = 0;
  std::uint64_t seed = 0;
  std::vector<RateSummary> rates;
};

// Seed for replicate r at rate index k; depends only on its arguments.
std::uint64_t replicate_seed(std::uint64_t plan_seed, std::uint64_t rate_index, std::uint64_t replicate);

// Draws replicate_count stratified samples per target rate, ranks each, and
// aggregates p-CumGains and lift on the common n/N grid. Replicates may run
// in parallel; aggregation runs in replicate order, so the summary does not
// depend on the thread count.
ResampleSummary run_plan(const std::vector<ScoredRecord>& pool, const ResamplePlan& plan);

enum class Regularity { holds, violated, not_applicable };

const char* to_string(Regularity verdict);

struct RegularityReport {
  Regularity verdict = Regularity::not_applicable;
  Ratio fraction;
  // (target rate, mean lift at fraction, mean AUC), ascending by rate.
  struct Entry {
    double rate = 0.0;
    double mean_lift = 0.0;
    double mean_auc = 0.0;
  };
  std::vector<Entry> entries;
};

// Mean AUC every rate must exceed for the ordering check to apply.
inline constexpr double kBetterThanRandomAuc = 0.55;

// Checks that mean lift at `small_fraction` strictly decreases as the positive
// rate increases. Returns not_applicable when the scorer is not better than
// random at some rate.
RegularityReport regularity_check(const ResampleSummary& summary, const Ratio& small_fraction = Ratio(5, 100));

}  // namespace liftkit
