#include "liftkit/disagreement.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <random>

#include "liftkit/compare.hpp"
#include "liftkit/error.hpp"
#include "liftkit/metrics.hpp"

namespace liftkit {
namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    acc = acc * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
    if (acc > kSaturated) return kSaturated;
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

// Advances idx (strictly increasing, values < n) to the next k-combination in
// lexicographic order. Returns false after the last one.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::size_t> first_combination(std::size_t k) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  return idx;
}

void check_metric(const MetricSpec& m, std::int64_t total) {
  if (m.kind != MetricSpec::Kind::auc && (m.cutoff < 1 || m.cutoff > total))
    throw Error(ErrorCode::out_of_range, "metric " + m.name() + " needs a cutoff in 1.." + std::to_string(total));
}

struct Candidate {
  std::vector<int> labels;
  Ratio a;
  Ratio b;
};

class Evaluator {
 public:
  Evaluator(const MetricSpec& a, const MetricSpec& b, std::span<const int> seed_labels)
      : a_(a), b_(b), shell_(RankedTestSet::from_ranked_labels(seed_labels)) {}

  Candidate operator()(std::vector<int> labels) const {
    const RankedTestSet ranked = shell_.with_labels(labels);
    return {std::move(labels), evaluate(a_, ranked), evaluate(b_, ranked)};
  }

 private:
  MetricSpec a_;
  MetricSpec b_;
  RankedTestSet shell_;
};

bool opposite(const Candidate& x, const Candidate& y) {
  return (x.a < y.a && x.b > y.b) || (x.a > y.a && x.b < y.b);
}

DisagreementReport make_report(const MetricSpec& ma, const MetricSpec& mb, const Candidate& x,
                               const Candidate& y) {
  return {ma, mb, x.labels, y.labels, x.a, y.a, x.b, y.b};
}

// Earliest i with any opposite partner, then its earliest partner.
std::optional<std::pair<std::size_t, std::size_t>> first_opposite_pair(const std::vector<Candidate>& c) {
  if (c.size() < 2) return std::nullopt;
  std::vector<std::size_t> order(c.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return c[i].a < c[j].a; });

  // Group boundaries over equal metric_a values.
  std::vector<std::size_t> group_of(c.size());
  std::vector<std::pair<std::size_t, std::size_t>> groups;
  for (std::size_t pos = 0; pos < order.size();) {
    std::size_t end = pos + 1;
    while (end < order.size() && c[order[end]].a == c[order[pos]].a) ++end;
    for (std::size_t p = pos; p < end; ++p) group_of[order[p]] = groups.size();
    groups.emplace_back(pos, end);
    pos = end;
  }
  const std::size_t g = groups.size();
  std::vector<std::optional<Ratio>> max_b_below(g), min_b_above(g);
  std::optional<Ratio> running;
  for (std::size_t k = 0; k < g; ++k) {
    max_b_below[k] = running;
    for (std::size_t p = groups[k].first; p < groups[k].second; ++p)
      if (!running || c[order[p]].b > *running) running = c[order[p]].b;
  }
  running.reset();
  for (std::size_t k = g; k-- > 0;) {
    min_b_above[k] = running;
    for (std::size_t p = groups[k].first; p < groups[k].second; ++p)
      if (!running || c[order[p]].b < *running) running = c[order[p]].b;
  }

  for (std::size_t i = 0; i < c.size(); ++i) {
    const std::size_t k = group_of[i];
    const bool below = max_b_below[k] && *max_b_below[k] > c[i].b;
    const bool above = min_b_above[k] && *min_b_above[k] < c[i].b;
    if (!below && !above) continue;
    for (std::size_t j = 0; j < c.size(); ++j)
      if (opposite(c[i], c[j])) return std::make_pair(i, j);
  }
  return std::nullopt;
}

SearchResult search_arrangements(const MetricSpec& ma, const MetricSpec& mb, const ArrangementSpace& space,
                                 const SearchOptions& options) {
  if (space.total < 2) throw Error(ErrorCode::invalid_argument, "arrangement space needs N >= 2");
  if (space.positives < 1 || space.positives >= space.total)
    throw Error(ErrorCode::invalid_argument, "arrangement space needs 1 <= N+ < N");
  check_metric(ma, space.total);
  check_metric(mb, space.total);

  std::vector<int> labels(static_cast<std::size_t>(space.total), 0);
  std::fill(labels.end() - space.positives, labels.end(), 1);
  const Evaluator eval(ma, mb, labels);

  SearchResult result;
  std::vector<Candidate> candidates;
  const std::uint64_t size = space_size(space);
  if (size <= options.exhaustive_limit) {
    result.exhaustive = true;
    candidates.reserve(static_cast<std::size_t>(size));
    do {
      candidates.push_back(eval(labels));
    } while (std::next_permutation(labels.begin(), labels.end()));
  } else {
    std::mt19937_64 rng(options.seed);
    candidates.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(options.budget, 1u << 20)));
    for (std::uint64_t s = 0; s < options.budget; ++s) {
      std::shuffle(labels.begin(), labels.end(), rng);
      candidates.push_back(eval(labels));
    }
  }
  result.examined = candidates.size();

  if (auto pair = first_opposite_pair(candidates)) {
    result.status = SearchStatus::found;
    result.report = make_report(ma, mb, candidates[pair->first], candidates[pair->second]);
  } else {
    result.status = result.exhaustive ? SearchStatus::none_exists : SearchStatus::budget_exhausted;
  }
  return result;
}

SearchResult search_neighborhood(const MetricSpec& ma, const MetricSpec& mb, const SwapNeighborhood& space,
                                 const SearchOptions& options) {
  const auto total = static_cast<std::int64_t>(space.base.size());
  if (total < 2) throw Error(ErrorCode::invalid_argument, "neighborhood base needs N >= 2");
  if (space.max_swaps < 0) throw Error(ErrorCode::invalid_argument, "max_swaps must be non-negative");
  check_metric(ma, total);
  check_metric(mb, total);

  std::vector<std::size_t> pos_at, neg_at;
  for (std::size_t i = 0; i < space.base.size(); ++i) {
    if (space.base[i] == 1)
      pos_at.push_back(i);
    else if (space.base[i] == 0)
      neg_at.push_back(i);
    else
      throw Error(ErrorCode::non_binary_label, "neighborhood base label at rank " + std::to_string(i + 1) +
                                                   " is not 0 or 1");
  }
  if (pos_at.empty() || neg_at.empty())
    throw Error(ErrorCode::single_class, "neighborhood base needs both classes");

  const Evaluator eval(ma, mb, space.base);
  const Candidate base = eval(space.base);
  const std::size_t max_k = std::min<std::size_t>(static_cast<std::size_t>(space.max_swaps),
                                                  std::min(pos_at.size(), neg_at.size()));

  auto flipped = [&](const std::vector<std::size_t>& pi, const std::vector<std::size_t>& ni) {
    std::vector<int> labels = space.base;
    for (std::size_t i : pi) labels[pos_at[i]] = 0;
    for (std::size_t i : ni) labels[neg_at[i]] = 1;
    return labels;
  };

  SearchResult result;
  auto found = [&](const Candidate& cand) {
    if (!opposite(base, cand)) return false;
    result.status = SearchStatus::found;
    result.report = make_report(ma, mb, base, cand);
    return true;
  };

  if (space_size(space) <= options.exhaustive_limit) {
    result.exhaustive = true;
    for (std::size_t k = 1; k <= max_k; ++k) {
      auto pi = first_combination(k);
      do {
        auto ni = first_combination(k);
        do {
          ++result.examined;
          if (found(eval(flipped(pi, ni)))) return result;
        } while (next_combination(ni, neg_at.size()));
      } while (next_combination(pi, pos_at.size()));
    }
    result.status = SearchStatus::none_exists;
    return result;
  }

  std::vector<double> weights;
  for (std::size_t k = 1; k <= max_k; ++k)
    weights.push_back(static_cast<double>(binomial(static_cast<std::int64_t>(pos_at.size()), k)) *
                      static_cast<double>(binomial(static_cast<std::int64_t>(neg_at.size()), k)));
  std::mt19937_64 rng(options.seed);
  std::discrete_distribution<std::size_t> pick_k(weights.begin(), weights.end());
  std::vector<std::size_t> pos_idx(pos_at.size()), neg_idx(neg_at.size());
  std::iota(pos_idx.begin(), pos_idx.end(), std::size_t{0});
  std::iota(neg_idx.begin(), neg_idx.end(), std::size_t{0});
  for (std::uint64_t s = 0; s < options.budget; ++s) {
    const std::size_t k = pick_k(rng) + 1;
    std::shuffle(pos_idx.begin(), pos_idx.end(), rng);
    std::shuffle(neg_idx.begin(), neg_idx.end(), rng);
    std::vector<std::size_t> pi(pos_idx.begin(), pos_idx.begin() + static_cast<std::ptrdiff_t>(k));
    std::vector<std::size_t> ni(neg_idx.begin(), neg_idx.begin() + static_cast<std::ptrdiff_t>(k));
    ++result.examined;
    if (found(eval(flipped(pi, ni)))) return result;
  }
  result.status = SearchStatus::budget_exhausted;
  return result;
}

}  // namespace

MetricSpec MetricSpec::parse(std::string_view text) {
  if (text == "auc") return {Kind::auc, 0};
  const auto at = text.find('@');
  if (at == std::string_view::npos)
    throw Error(ErrorCode::invalid_argument,
                "unknown metric '" + std::string(text) + "' (expected auc, accuracy@n, or lift@n)");
  const auto head = text.substr(0, at);
  const auto tail = text.substr(at + 1);
  Kind kind;
  if (head == "accuracy")
    kind = Kind::accuracy;
  else if (head == "lift")
    kind = Kind::lift;
  else
    throw Error(ErrorCode::invalid_argument, "unknown metric '" + std::string(head) + "'");
  std::int64_t n = 0;
  auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), n);
  if (ec != std::errc() || ptr != tail.data() + tail.size() || n < 1)
    throw Error(ErrorCode::invalid_argument, "metric cutoff in '" + std::string(text) + "' must be a positive integer");
  return {kind, n};
}

std::string MetricSpec::name() const {
  switch (kind) {
    case Kind::auc: return "auc";
    case Kind::accuracy: return "accuracy@" + std::to_string(cutoff);
    case Kind::lift: return "lift@" + std::to_string(cutoff);
  }
  return "auc";
}

Ratio evaluate(const MetricSpec& metric, const RankedTestSet& ranked) {
  switch (metric.kind) {
    case MetricSpec::Kind::auc: return auc_pairs(ranked);
    case MetricSpec::Kind::accuracy: return accuracy_at(ranked, metric.cutoff);
    case MetricSpec::Kind::lift: return lift(ranked, metric.cutoff);
  }
  return auc_pairs(ranked);
}

const char* to_string(Preference p) {
  switch (p) {
    case Preference::first: return "first";
    case Preference::second: return "second";
    case Preference::equal: return "equal";
  }
  return "equal";
}

Preference preference(const Ratio& first, const Ratio& second) {
  if (first > second) return Preference::first;
  if (first < second) return Preference::second;
  return Preference::equal;
}

const char* to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::found: return "found";
    case SearchStatus::none_exists: return "none";
    case SearchStatus::budget_exhausted: return "budget-exhausted";
  }
  return "none";
}

bool disagree(const MetricSpec& metric_a, const MetricSpec& metric_b, const RankedTestSet& first,
              const RankedTestSet& second) {
  require_same_labels(first, second);
  const auto pa = preference(evaluate(metric_a, first), evaluate(metric_a, second));
  const auto pb = preference(evaluate(metric_b, first), evaluate(metric_b, second));
  return pa != Preference::equal && pb != Preference::equal && pa != pb;
}

bool certify(const DisagreementReport& report) {
  if (report.first.size() != report.second.size()) return false;
  const auto first = RankedTestSet::from_ranked_labels(report.first);
  const auto second = RankedTestSet::from_ranked_labels(report.second);
  if (first.positives() != second.positives()) return false;
  if (evaluate(report.metric_a, first) != report.a_first) return false;
  if (evaluate(report.metric_a, second) != report.a_second) return false;
  if (evaluate(report.metric_b, first) != report.b_first) return false;
  if (evaluate(report.metric_b, second) != report.b_second) return false;
  const auto va = report.verdict_a();
  const auto vb = report.verdict_b();
  return va != Preference::equal && vb != Preference::equal && va != vb &&
         disagree(report.metric_a, report.metric_b, first, second);
}

std::uint64_t space_size(const SearchSpace& space) {
  if (const auto* all = std::get_if<ArrangementSpace>(&space)) return binomial(all->total, all->positives);
  const auto& hood = std::get<SwapNeighborhood>(space);
  const auto p = static_cast<std::int64_t>(std::count(hood.base.begin(), hood.base.end(), 1));
  const auto q = static_cast<std::int64_t>(hood.base.size()) - p;
  std::uint64_t total = 0;
  for (std::int64_t k = 1; k <= hood.max_swaps && k <= std::min(p, q); ++k)
    total = saturating_add(total, saturating_mul(binomial(p, k), binomial(q, k)));
  return total;
}

SearchResult find_disagreement(const MetricSpec& metric_a, const MetricSpec& metric_b, const SearchSpace& space,
                               const SearchOptions& options) {
  if (const auto* all = std::get_if<ArrangementSpace>(&space))
    return search_arrangements(metric_a, metric_b, *all, options);
  return search_neighborhood(metric_a, metric_b, std::get<SwapNeighborhood>(space), options);
}

}  // namespace liftkit
