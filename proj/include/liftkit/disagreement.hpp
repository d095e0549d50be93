#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "liftkit/ranking.hpp"
#include "liftkit/ratio.hpp"

namespace liftkit {

// One of accuracy@n, auc, lift@n.
struct MetricSpec {
  enum class Kind { accuracy, auc, lift };

  Kind kind = Kind::auc;
  std::int64_t cutoff = 0;  // unused for auc

  static MetricSpec parse(std::string_view text);
  std::string name() const;

  friend bool operator==(const MetricSpec&, const MetricSpec&) = default;
};

Ratio evaluate(const MetricSpec& metric, const RankedTestSet& ranked);

// Every arrangement of `positives` ones among `total` ranked positions.
struct ArrangementSpace {
  std::int64_t total = 0;
  std::int64_t positives = 0;
};

// Arrangements reachable from `base` by exchanging up to `max_swaps` positives
// with negatives. Candidates are compared against `base` itself.
struct SwapNeighborhood {
  std::vector<int> base;
  int max_swaps = 2;
};

using SearchSpace = std::variant<ArrangementSpace, SwapNeighborhood>;

struct SearchOptions {
  std::uint64_t exhaustive_limit = 1'000'000;  // enumerate when the space is no larger
  std::uint64_t budget = 100'000;              // samples drawn otherwise
  std::uint64_t seed = 0;
};

enum class Preference { first, second, equal };

const char* to_string(Preference p);
Preference preference(const Ratio& first, const Ratio& second);

// A pair of ranked label sequences on which the two metrics order the
// classifiers in strictly opposite directions.
struct DisagreementReport {
  MetricSpec metric_a;
  MetricSpec metric_b;
  std::vector<int> first;
  std::vector<int> second;
  Ratio a_first, a_second;
  Ratio b_first, b_second;

  Preference verdict_a() const { return preference(a_first, a_second); }
  Preference verdict_b() const { return preference(b_first, b_second); }
};

// Re-evaluates both metrics on the embedded sequences and checks that the
// stored values and the opposite verdicts reproduce.
bool certify(const DisagreementReport& report);

// True when metric_a and metric_b order `first` and `second` strictly
// oppositely.
bool disagree(const MetricSpec& metric_a, const MetricSpec& metric_b, const RankedTestSet& first,
              const RankedTestSet& second);

enum class SearchStatus { found, none_exists, budget_exhausted };

const char* to_string(SearchStatus status);

struct SearchResult {
  SearchStatus status = SearchStatus::none_exists;
  std::optional<DisagreementReport> report;
  std::uint64_t examined = 0;  // arrangements evaluated
  bool exhaustive = false;
};

// Exhaustive when the space holds at most options.exhaustive_limit
// arrangements; the counterexample returned is then the one whose first
// sequence comes earliest in enumeration order (lexicographic for
// ArrangementSpace, fewest swaps first for SwapNeighborhood), then the
// earliest partner. Larger spaces are sampled with a seeded generator and a
// miss is reported as budget_exhausted, never as none_exists.
SearchResult find_disagreement(const MetricSpec& metric_a, const MetricSpec& metric_b,
                               const SearchSpace& space, const SearchOptions& options = {});

// Number of arrangements in the space, saturating at UINT64_MAX.
std::uint64_t space_size(const SearchSpace& space);

}  // namespace liftkit
