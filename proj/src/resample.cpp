#include "liftkit/resample.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <sstream>
#include <thread>

#include "liftkit/error.hpp"
#include "liftkit/metrics.hpp"

namespace liftkit {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::string rate_text(double rate) {
  std::ostringstream os;
  os << rate;
  return os.str();
}

void require_interior(double rate) {
  if (!(rate > 0.0 && rate < 1.0))
    throw Error(ErrorCode::invalid_argument, "target rate " + rate_text(rate) + " must lie strictly between 0 and 1");
}

// Moves a uniform random k-subset of `items` to its front.
template <typename T>
void partial_shuffle(std::vector<T>& items, std::size_t k, std::mt19937_64& rng) {
  for (std::size_t i = 0; i < k; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, items.size() - 1);
    std::swap(items[i], items[pick(rng)]);
  }
}

struct ReplicateResult {
  std::vector<double> p_cum_gains;
  std::vector<double> lift;
  double auc = 0.0;
};

Band aggregate(const std::vector<ReplicateResult>& reps, auto&& field) {
  Band b;
  double sum = 0.0;
  b.min = field(reps.front());
  b.max = b.min;
  for (const auto& r : reps) {
    const double v = field(r);
    sum += v;
    b.min = std::min(b.min, v);
    b.max = std::max(b.max, v);
  }
  b.mean = sum / static_cast<double>(reps.size());
  // Keep min <= mean <= max despite rounding in the running sum.
  b.mean = std::clamp(b.mean, b.min, b.max);
  return b;
}

}  // namespace

std::vector<ScoredRecord> synthetic_scorer(std::int64_t n_pos, std::int64_t n_neg, double separation,
                                           std::uint64_t seed) {
  if (n_pos < 1 || n_neg < 1)
    throw Error(ErrorCode::invalid_argument, "synthetic scorer needs at least one record of each class");
  if (!std::isfinite(separation) || separation < 0.0)
    throw Error(ErrorCode::invalid_argument, "separation must be finite and non-negative");

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, 1.0);
  std::vector<ScoredRecord> out;
  out.reserve(static_cast<std::size_t>(n_pos + n_neg));
  for (std::int64_t i = 0; i < n_pos; ++i) out.push_back({"", separation + noise(rng), 1});
  for (std::int64_t i = 0; i < n_neg; ++i) out.push_back({"", noise(rng), 0});
  std::shuffle(out.begin(), out.end(), rng);
  for (std::size_t i = 0; i < out.size(); ++i) out[i].id = "s" + std::to_string(i + 1);
  return out;
}

std::int64_t stratified_positive_count(double rate, std::int64_t size) {
  return static_cast<std::int64_t>(std::floor(rate * static_cast<double>(size) + 0.5));
}

std::vector<ScoredRecord> stratified_sample(const std::vector<ScoredRecord>& pool, double rate,
                                            std::int64_t size, std::uint64_t seed) {
  require_interior(rate);
  if (size < 1) throw Error(ErrorCode::invalid_argument, "sample size must be positive");

  std::vector<std::size_t> pos, neg;
  for (std::size_t i = 0; i < pool.size(); ++i) (pool[i].label == 1 ? pos : neg).push_back(i);
  const std::int64_t want_pos = stratified_positive_count(rate, size);
  const std::int64_t want_neg = size - want_pos;
  if (want_pos > static_cast<std::int64_t>(pos.size()) || want_neg > static_cast<std::int64_t>(neg.size()))
    throw Error(ErrorCode::infeasible,
                "rate " + rate_text(rate) + " with size " + std::to_string(size) + " needs " +
                    std::to_string(want_pos) + " positives and " + std::to_string(want_neg) +
                    " negatives; pool has " + std::to_string(pos.size()) + " and " + std::to_string(neg.size()));

  std::mt19937_64 rng(seed);
  partial_shuffle(pos, static_cast<std::size_t>(want_pos), rng);
  partial_shuffle(neg, static_cast<std::size_t>(want_neg), rng);
  std::vector<ScoredRecord> out;
  out.reserve(static_cast<std::size_t>(size));
  for (std::int64_t i = 0; i < want_pos; ++i) out.push_back(pool[pos[static_cast<std::size_t>(i)]]);
  for (std::int64_t i = 0; i < want_neg; ++i) out.push_back(pool[neg[static_cast<std::size_t>(i)]]);
  std::shuffle(out.begin(), out.end(), rng);
  return out;
}

std::uint64_t replicate_seed(std::uint64_t plan_seed, std::uint64_t rate_index, std::uint64_t replicate) {
  return splitmix64(splitmix64(splitmix64(plan_seed) ^ rate_index) ^ replicate);
}

ResampleSummary run_plan(const std::vector<ScoredRecord>& pool, const ResamplePlan& plan) {
  if (plan.target_rates.empty()) throw Error(ErrorCode::invalid_argument, "resample plan has no target rates");
  if (plan.replicate_count < 1) throw Error(ErrorCode::invalid_argument, "replicate count must be positive");
  if (plan.sample_size < 10) throw Error(ErrorCode::invalid_argument, "sample size must be at least 10");
  if (plan.grid_points < 1) throw Error(ErrorCode::invalid_argument, "grid needs at least one point");

  const auto pool_pos = std::count_if(pool.begin(), pool.end(), [](const ScoredRecord& r) { return r.label == 1; });
  const auto pool_neg = static_cast<std::int64_t>(pool.size()) - pool_pos;
  for (double rate : plan.target_rates) {
    require_interior(rate);
    const auto want_pos = stratified_positive_count(rate, plan.sample_size);
    if (want_pos > pool_pos || plan.sample_size - want_pos > pool_neg)
      throw Error(ErrorCode::infeasible, "rate " + rate_text(rate) + " is infeasible: a sample of " +
                                             std::to_string(plan.sample_size) + " needs " + std::to_string(want_pos) +
                                             " positives and " + std::to_string(plan.sample_size - want_pos) +
                                             " negatives; pool has " + std::to_string(pool_pos) + " and " +
                                             std::to_string(pool_neg));
    if (want_pos == 0 || want_pos == plan.sample_size)
      throw Error(ErrorCode::infeasible, "rate " + rate_text(rate) + " rounds to a single-class sample of size " +
                                             std::to_string(plan.sample_size));
  }

  const auto grid_n = static_cast<std::int64_t>(plan.grid_points);
  std::vector<std::int64_t> cutoffs;
  for (std::int64_t k = 1; k <= grid_n; ++k) cutoffs.push_back((k * plan.sample_size + grid_n - 1) / grid_n);

  const std::size_t n_rates = plan.target_rates.size();
  const auto reps = static_cast<std::size_t>(plan.replicate_count);
  std::vector<std::vector<ReplicateResult>> results(n_rates, std::vector<ReplicateResult>(reps));

  auto run_one = [&](std::size_t task) {
    const std::size_t k = task / reps;
    const std::size_t r = task % reps;
    auto sample = stratified_sample(pool, plan.target_rates[k], plan.sample_size, replicate_seed(plan.seed, k, r));
    const RankedTestSet ranked = rank_records(std::move(sample), plan.tie_policy);
    ReplicateResult& out = results[k][r];
    out.p_cum_gains.reserve(cutoffs.size());
    out.lift.reserve(cutoffs.size());
    for (std::int64_t n : cutoffs) {
      out.p_cum_gains.push_back(p_cum_gains(ranked, n).value());
      out.lift.push_back(lift(ranked, n).value());
    }
    out.auc = auc_pairs(ranked).value();
  };

  const std::size_t tasks = n_rates * reps;
  unsigned workers = plan.threads != 0 ? plan.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, tasks));
  if (workers <= 1) {
    for (std::size_t t = 0; t < tasks; ++t) run_one(t);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool_threads;
    for (unsigned w = 0; w < workers; ++w) {
      pool_threads.emplace_back([&] {
        for (std::size_t t = next++; t < tasks && !failed; t = next++) {
          try {
            run_one(t);
          } catch (...) {
            if (!failed.exchange(true)) failure = std::current_exception();
          }
        }
      });
    }
    for (auto& th : pool_threads) th.join();
    if (failure) std::rethrow_exception(failure);
  }

  ResampleSummary summary;
  summary.sample_size = plan.sample_size;
  summary.seed = plan.seed;
  for (std::size_t k = 0; k < n_rates; ++k) {
    const auto& reps_k = results[k];
    RateSummary rs;
    rs.target_rate = plan.target_rates[k];
    rs.positives = stratified_positive_count(rs.target_rate, plan.sample_size);
    rs.realized_rate = static_cast<double>(rs.positives) / static_cast<double>(plan.sample_size);
    rs.replicates = plan.replicate_count;
    rs.auc = aggregate(reps_k, [](const ReplicateResult& r) { return r.auc; });
    for (std::size_t g = 0; g < cutoffs.size(); ++g) {
      GridPoint gp;
      gp.fraction = Ratio(static_cast<std::int64_t>(g) + 1, grid_n);
      gp.n = cutoffs[g];
      gp.p_cum_gains = aggregate(reps_k, [g](const ReplicateResult& r) { return r.p_cum_gains[g]; });
      gp.lift = aggregate(reps_k, [g](const ReplicateResult& r) { return r.lift[g]; });
      rs.grid.push_back(gp);
    }
    summary.rates.push_back(std::move(rs));
  }
  return summary;
}

const char* to_string(Regularity verdict) {
  switch (verdict) {
    case Regularity::holds: return "holds";
    case Regularity::violated: return "violated";
    case Regularity::not_applicable: return "not-applicable";
  }
  return "not-applicable";
}

RegularityReport regularity_check(const ResampleSummary& summary, const Ratio& small_fraction) {
  if (summary.rates.size() < 2)
    throw Error(ErrorCode::invalid_argument, "regularity check needs at least two target rates");
  RegularityReport report;
  report.fraction = small_fraction;
  bool better_than_random = true;
  for (const auto& rs : summary.rates) {
    auto it = std::find_if(rs.grid.begin(), rs.grid.end(),
                           [&](const GridPoint& gp) { return gp.fraction == small_fraction; });
    if (it == rs.grid.end())
      throw Error(ErrorCode::out_of_range, "grid point " + small_fraction.exact() + " missing from summary");
    report.entries.push_back({rs.target_rate, it->lift.mean, rs.auc.mean});
    if (!(rs.auc.mean > kBetterThanRandomAuc)) better_than_random = false;
  }
  std::sort(report.entries.begin(), report.entries.end(),
            [](const auto& a, const auto& b) { return a.rate < b.rate; });
  if (!better_than_random) {
    report.verdict = Regularity::not_applicable;
    return report;
  }
  report.verdict = Regularity::holds;
  for (std::size_t i = 1; i < report.entries.size(); ++i)
    if (!(report.entries[i].mean_lift < report.entries[i - 1].mean_lift)) report.verdict = Regularity::violated;
  return report;
}

}  // namespace liftkit
