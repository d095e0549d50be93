#include "liftkit/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "liftkit/chart.hpp"
#include "liftkit/compare.hpp"
#include "liftkit/curve_io.hpp"
#include "liftkit/disagreement.hpp"
#include "liftkit/error.hpp"
#include "liftkit/metrics.hpp"
#include "liftkit/resample.hpp"
#include "liftkit/scored_file.hpp"

namespace liftkit {
namespace {

struct Options {
  std::vector<std::string> inputs;
  std::string input_format = "auto";
  std::string delimiter = ",";
  std::string label_column = "label";
  std::string score_column = "score";
  std::string id_column = "id";
  std::string tie_policy = "input";
  std::string format = "text";
  int precision = 5;
  bool exact = false;
  std::vector<std::int64_t> n;
  std::vector<std::string> fractions;
  double q_tp = 1.0;
  double q_fp = 0.0;
  std::vector<double> rates;
  std::int64_t reps = 50;
  std::int64_t size = 5000;
  std::uint64_t seed = 0;
  std::string out;

  // auc
  std::string method = "pairs";
  // perturb
  std::vector<std::string> swaps;
  std::string preset;
  // disagree
  std::string metric_a;
  std::string metric_b;
  std::int64_t npos = 0;
  int max_swaps = 2;
  std::uint64_t budget = 100'000;
  std::uint64_t exhaustive_limit = 1'000'000;
  // resample
  std::int64_t pool_pos = 11'700;
  std::int64_t pool_neg = 88'300;
  double separation = kSeparationForAuc90;
  int grid = 100;
  unsigned threads = 0;
  std::string small_fraction = "0.05";
  // chart
  std::string kind = "gains-fraction";
  std::string title;
  bool no_baseline = false;
  std::string x_axis = "fraction";
};

class Command {
 public:
  Command(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {}

  int run(const std::string& name);

 private:
  std::ostream& sink() {
    if (opt_.out.empty()) return out_;
    if (!file_) {
      file_ = std::make_unique<std::ofstream>(opt_.out);
      if (!*file_) throw Error(ErrorCode::io, "cannot open '" + opt_.out + "' for writing");
    }
    return *file_;
  }

  OutputFormat format() const { return parse_output_format(opt_.format); }

  std::string render(const Ratio& r) const { return opt_.exact ? r.exact() : r.fixed(opt_.precision); }
  std::string render(double v) const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", opt_.precision, v);
    return buf;
  }

  ScoredFile scored_file(const std::string& path) const {
    ScoredFile f;
    f.path = path;
    if (opt_.input_format == "auto")
      f.format = infer_format(path);
    else if (opt_.input_format == "csv" || opt_.input_format == "delimited")
      f.format = InputFormat::delimited;
    else if (opt_.input_format == "jsonl" || opt_.input_format == "json-lines")
      f.format = InputFormat::json_lines;
    else
      throw Error(ErrorCode::invalid_argument, "unknown input format '" + opt_.input_format + "'");
    if (opt_.delimiter.size() != 1) throw Error(ErrorCode::invalid_argument, "--delimiter must be one character");
    f.delimiter = opt_.delimiter == "\\t" ? '\t' : opt_.delimiter[0];
    f.label_column = opt_.label_column;
    f.score_column = opt_.score_column;
    f.id_column = opt_.id_column;
    return f;
  }

  const std::string& single_input() const {
    if (opt_.inputs.size() != 1) throw Error(ErrorCode::invalid_argument, "exactly one --input is required");
    return opt_.inputs.front();
  }

  RankedTestSet load(const std::string& path) const {
    return rank_records(load_scored(scored_file(path)), parse_tie_policy(opt_.tie_policy));
  }

  // Cutoffs from --n and --fraction (n = ceil(f * N), 0 < f <= 1).
  std::vector<std::int64_t> cutoffs(std::int64_t total) const {
    std::vector<std::int64_t> out = opt_.n;
    for (const auto& text : opt_.fractions) {
      const Ratio f = parse_decimal(text);
      if (f <= Ratio(0) || f > Ratio(1))
        throw Error(ErrorCode::invalid_argument, "--fraction " + text + " must lie in (0, 1]");
      const __int128 num = static_cast<__int128>(f.num()) * total;
      out.push_back(static_cast<std::int64_t>((num + f.den() - 1) / f.den()));
    }
    return out;
  }

  void emit(const std::vector<CurveSeries>& series) { emit_curves(sink(), series, format()); }

  int gains();
  int lift_cmd();
  int deciles();
  int benefit();
  int auc();
  int roc();
  int compare();
  int perturb();
  int disagree();
  int resample();
  int chart();

  const Options& opt_;
  std::ostream& out_;
  std::unique_ptr<std::ofstream> file_;
};

int Command::gains() {
  const auto ranked = load(single_input());
  if (format() != OutputFormat::text) {
    std::vector<CurveSeries> series{gains_series(ranked, XKind::count)};
    if (ranked.positives() > 0) series.push_back(gains_series(ranked, XKind::fraction));
    emit(series);
    return kExitOk;
  }
  auto ns = cutoffs(ranked.size());
  if (ns.empty())
    for (std::int64_t n = 1; n <= ranked.size(); ++n) ns.push_back(n);
  auto& os = sink();
  os << "n\tcum_gains\tn/N\tp_cum_gains\n";
  for (std::int64_t n : ns) {
    os << n << '\t' << render(cum_gains(ranked, n)) << '\t' << render(Ratio(n, ranked.size())) << '\t'
       << (ranked.positives() > 0 && n > 0 ? render(p_cum_gains(ranked, n)) : std::string("undefined")) << '\n';
  }
  return kExitOk;
}

int Command::lift_cmd() {
  const auto ranked = load(single_input());
  if (format() != OutputFormat::text) {
    emit({lift_series(ranked, XKind::count)});
    return kExitOk;
  }
  const auto ns = cutoffs(ranked.size());
  auto& os = sink();
  if (ns.size() == 1) {
    os << render(lift(ranked, ns.front())) << '\n';
    return kExitOk;
  }
  os << "n\tn/N\tlift\n";
  auto row = [&](std::int64_t n) {
    os << n << '\t' << render(Ratio(n, ranked.size())) << '\t' << render(lift(ranked, n)) << '\n';
  };
  if (ns.empty())
    for (std::int64_t n = 1; n <= ranked.size(); ++n) row(n);
  else
    for (std::int64_t n : ns) row(n);
  return kExitOk;
}

int Command::deciles() {
  const auto ranked = load(single_input());
  if (format() != OutputFormat::text) {
    emit({decile_series(ranked)});
    return kExitOk;
  }
  const auto values = decile_lift(ranked);
  auto& os = sink();
  os << "decile\tn\tlift\n";
  for (int k = 1; k <= 10; ++k)
    os << k << '\t' << decile_cutoff(ranked.size(), k) << '\t' << render(values[k - 1]) << '\n';
  return kExitOk;
}

int Command::benefit() {
  const auto ranked = load(single_input());
  const CostSpec costs{opt_.q_tp, opt_.q_fp};
  if (!std::isfinite(costs.q_tp) || !std::isfinite(costs.q_fp))
    throw Error(ErrorCode::invalid_argument, "--qtp and --qfp must be finite");
  if (format() != OutputFormat::text) {
    emit({benefit_series(ranked, costs)});
    return kExitOk;
  }
  const auto ns = cutoffs(ranked.size());
  auto& os = sink();
  if (ns.size() == 1) {
    os << render(cum_benefit(ranked, ns.front(), costs)) << '\n';
    return kExitOk;
  }
  os << "n\tcum_benefit\n";
  auto row = [&](std::int64_t n) { os << n << '\t' << render(cum_benefit(ranked, n, costs)) << '\n'; };
  if (ns.empty())
    for (std::int64_t n = 1; n <= ranked.size(); ++n) row(n);
  else
    for (std::int64_t n : ns) row(n);
  return kExitOk;
}

int Command::auc() {
  const auto ranked = load(single_input());
  Ratio value;
  if (opt_.method == "pairs")
    value = auc_pairs(ranked);
  else if (opt_.method == "wilcoxon")
    value = auc_wilcoxon(ranked);
  else
    throw Error(ErrorCode::invalid_argument, "--method must be pairs or wilcoxon");
  auto& os = sink();
  if (format() == OutputFormat::json)
    os << nlohmann::ordered_json{{"auc", value.value()}, {"num", value.num()}, {"den", value.den()}}.dump() << '\n';
  else
    os << render(value) << '\n';
  return kExitOk;
}

int Command::roc() {
  const auto ranked = load(single_input());
  const auto series = roc_points(ranked);
  if (format() != OutputFormat::text) {
    emit({series});
    return kExitOk;
  }
  auto& os = sink();
  os << "fpr\ttpr\n";
  for (const auto& p : series.points) os << render(*p.x_exact) << '\t' << render(*p.y_exact) << '\n';
  return kExitOk;
}

std::vector<std::string> run_names(const std::vector<std::string>& paths) {
  std::vector<std::string> names;
  for (const auto& p : paths) {
    std::string base = std::filesystem::path(p).stem().string();
    std::string name = base;
    for (int k = 2; std::find(names.begin(), names.end(), name) != names.end(); ++k) name = base + "#" + std::to_string(k);
    names.push_back(name);
  }
  return names;
}

int Command::compare() {
  if (opt_.inputs.size() < 2) throw Error(ErrorCode::invalid_argument, "compare needs at least two --input files");
  const auto names = run_names(opt_.inputs);
  std::vector<ClassifierRun> runs;
  for (std::size_t i = 0; i < opt_.inputs.size(); ++i) runs.push_back({names[i], load(opt_.inputs[i])});
  const auto table = compare_at(runs, cutoffs(runs.front().ranked.size()));

  auto& os = sink();
  if (format() == OutputFormat::json) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const auto& t : table) {
      nlohmann::ordered_json jt{{"n", t.n}, {"tie", t.tie()}};
      jt["runs"] = nlohmann::ordered_json::array();
      for (const auto& e : t.entries)
        jt["runs"].push_back({{"run", runs[e.run].name},
                              {"cum_gains", e.cum_gains.value()},
                              {"lift", e.lift.value()},
                              {"lift_num", e.lift.num()},
                              {"lift_den", e.lift.den()},
                              {"winner", e.winner}});
      doc.push_back(std::move(jt));
    }
    os << doc.dump(2) << '\n';
    return kExitOk;
  }
  const char sep = format() == OutputFormat::csv ? ',' : '\t';
  os << "n" << sep << "run" << sep << "cum_gains" << sep << "lift" << sep << "winner\n";
  for (const auto& t : table)
    for (const auto& e : t.entries)
      os << t.n << sep << runs[e.run].name << sep << render(e.cum_gains) << sep << render(e.lift) << sep
         << (e.winner ? (t.tie() ? "tie" : "yes") : "no") << '\n';
  return kExitOk;
}

SwapSpec parse_swaps(const std::vector<std::string>& texts) {
  SwapSpec spec;
  for (const auto& t : texts) {
    const auto colon = t.find(':');
    if (colon == std::string::npos) throw Error(ErrorCode::invalid_argument, "--swap expects RANK:RANK, got '" + t + "'");
    try {
      spec.pairs.emplace_back(std::stoll(t.substr(0, colon)), std::stoll(t.substr(colon + 1)));
    } catch (const std::exception&) {
      throw Error(ErrorCode::invalid_argument, "--swap expects integer ranks, got '" + t + "'");
    }
  }
  return spec;
}

int Command::perturb() {
  const auto ranked = load(single_input());
  SwapSpec spec = parse_swaps(opt_.swaps);
  if (!opt_.preset.empty()) {
    SwapSpec preset;
    if (opt_.preset == "higher-auc-lower-lift")
      preset = higher_auc_lower_lift_swaps();
    else if (opt_.preset == "lower-auc-higher-lift")
      preset = lower_auc_higher_lift_swaps();
    else if (opt_.preset == "lower-auc-same-lift")
      preset = lower_auc_same_lift_swaps();
    else
      throw Error(ErrorCode::invalid_argument, "unknown --preset '" + opt_.preset + "'");
    spec.pairs.insert(spec.pairs.end(), preset.pairs.begin(), preset.pairs.end());
  }
  const auto perturbed = apply_swaps(ranked, spec);
  write_scored(sink(), perturbed.records());
  if (!opt_.out.empty() && perturbed.positives() > 0 && perturbed.negatives() > 0)
    out_ << "auc_before\t" << render(auc_pairs(ranked)) << "\nauc_after\t" << render(auc_pairs(perturbed)) << '\n';
  return kExitOk;
}

std::string label_string(const std::vector<int>& labels) {
  std::string s;
  for (int v : labels) s += static_cast<char>('0' + v);
  return s;
}

int Command::disagree() {
  const auto ma = MetricSpec::parse(opt_.metric_a);
  const auto mb = MetricSpec::parse(opt_.metric_b);
  SearchSpace space;
  std::string space_text;
  if (!opt_.inputs.empty()) {
    const auto base = load(single_input());
    space = SwapNeighborhood{base.labels(), opt_.max_swaps};
    space_text = "swap-neighborhood of " + opt_.inputs.front() + " (max swaps " + std::to_string(opt_.max_swaps) + ")";
  } else {
    if (opt_.n.size() != 1) throw Error(ErrorCode::invalid_argument, "disagree needs --n N and --npos N+ (or --input)");
    space = ArrangementSpace{opt_.n.front(), opt_.npos};
    space_text = "arrangements N=" + std::to_string(opt_.n.front()) + " N+=" + std::to_string(opt_.npos);
  }
  const auto result = find_disagreement(ma, mb, space, {opt_.exhaustive_limit, opt_.budget, opt_.seed});

  auto& os = sink();
  if (format() == OutputFormat::json) {
    nlohmann::ordered_json doc{{"status", to_string(result.status)},
                               {"space", space_text},
                               {"exhaustive", result.exhaustive},
                               {"examined", result.examined}};
    if (result.report) {
      const auto& r = *result.report;
      auto metric = [](const MetricSpec& m, const Ratio& f, const Ratio& s, Preference p) {
        return nlohmann::ordered_json{{"metric", m.name()},
                                      {"first", f.exact()},
                                      {"second", s.exact()},
                                      {"prefers", to_string(p)}};
      };
      doc["first"] = label_string(r.first);
      doc["second"] = label_string(r.second);
      doc["metric_a"] = metric(r.metric_a, r.a_first, r.a_second, r.verdict_a());
      doc["metric_b"] = metric(r.metric_b, r.b_first, r.b_second, r.verdict_b());
      doc["certified"] = certify(r);
    }
    os << doc.dump(2) << '\n';
  } else {
    os << "status: " << to_string(result.status) << '\n';
    os << "space: " << space_text << (result.exhaustive ? " (exhaustive, " : " (sampled, ") << result.examined
       << " examined)\n";
    if (result.report) {
      const auto& r = *result.report;
      os << "first:  " << label_string(r.first) << '\n';
      os << "second: " << label_string(r.second) << '\n';
      os << r.metric_a.name() << ": " << render(r.a_first) << " vs " << render(r.a_second) << " (prefers "
         << to_string(r.verdict_a()) << ")\n";
      os << r.metric_b.name() << ": " << render(r.b_first) << " vs " << render(r.b_second) << " (prefers "
         << to_string(r.verdict_b()) << ")\n";
      os << "certified: " << (certify(r) ? "yes" : "no") << '\n';
    }
  }
  return result.status == SearchStatus::budget_exhausted ? kExitInfeasible : kExitOk;
}

int Command::resample() {
  std::vector<ScoredRecord> pool;
  if (!opt_.inputs.empty())
    pool = load_scored(scored_file(single_input()));
  else
    pool = synthetic_scorer(opt_.pool_pos, opt_.pool_neg, opt_.separation, opt_.seed);

  ResamplePlan plan;
  plan.target_rates = opt_.rates;
  plan.replicate_count = opt_.reps;
  plan.sample_size = opt_.size;
  plan.seed = opt_.seed;
  plan.grid_points = opt_.grid;
  plan.threads = opt_.threads;
  plan.tie_policy = parse_tie_policy(opt_.tie_policy);
  const auto summary = run_plan(pool, plan);

  std::optional<RegularityReport> regularity;
  if (summary.rates.size() >= 2) {
    try {
      regularity = regularity_check(summary, parse_decimal(opt_.small_fraction));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::out_of_range) throw;
    }
  }
  auto print_regularity = [&](std::ostream& os) {
    if (!regularity) return;
    os << "regularity at n/N=" << regularity->fraction.exact() << ": " << to_string(regularity->verdict) << '\n';
    for (const auto& e : regularity->entries)
      os << "  rate " << e.rate << "\tmean lift " << render(e.mean_lift) << "\tmean auc " << render(e.mean_auc)
         << '\n';
  };

  if (format() == OutputFormat::text) {
    auto& os = sink();
    os << "rate\tfraction\tn\tlift_mean\tlift_min\tlift_max\tpcg_mean\n";
    for (const auto& rs : summary.rates)
      for (const auto& gp : rs.grid)
        os << rs.target_rate << '\t' << render(gp.fraction) << '\t' << gp.n << '\t' << render(gp.lift.mean) << '\t'
           << render(gp.lift.min) << '\t' << render(gp.lift.max) << '\t' << render(gp.p_cum_gains.mean) << '\n';
    print_regularity(out_);
    return kExitOk;
  }
  write_summary(sink(), summary, format());
  if (!opt_.out.empty()) print_regularity(out_);
  return kExitOk;
}

int Command::chart() {
  if (opt_.inputs.empty()) throw Error(ErrorCode::invalid_argument, "chart needs at least one --input");
  ChartSpec spec;
  spec.kind = parse_chart_kind(opt_.kind);
  spec.include_baseline = !opt_.no_baseline;
  spec.title = opt_.title;
  spec.output_path = opt_.out;
  const CostSpec costs{opt_.q_tp, opt_.q_fp};
  const XKind lift_x = parse_x_kind(opt_.x_axis);

  const auto names = run_names(opt_.inputs);
  std::vector<CurveSeries> series;
  for (std::size_t i = 0; i < opt_.inputs.size(); ++i) {
    const auto ranked = load(opt_.inputs[i]);
    if (i == 0) {
      spec.total = ranked.size();
      spec.positives = ranked.positives();
    }
    CurveSeries s;
    switch (spec.kind) {
      case ChartKind::gains_count: s = gains_series(ranked, XKind::count); break;
      case ChartKind::gains_fraction: s = gains_series(ranked, XKind::fraction); break;
      case ChartKind::lift: s = lift_series(ranked, lift_x); break;
      case ChartKind::decile_lift: s = decile_series(ranked); break;
      case ChartKind::benefit: s = benefit_series(ranked, costs); break;
      case ChartKind::roc: s = roc_points(ranked); break;
    }
    s.name = names[i];
    series.push_back(std::move(s));
  }
  sink() << render_chart(spec, series);
  return kExitOk;
}

int Command::run(const std::string& name) {
  if (opt_.precision < 0 || opt_.precision > 17) throw Error(ErrorCode::invalid_argument, "--precision must be in 0..17");
  if (name == "gains") return gains();
  if (name == "lift") return lift_cmd();
  if (name == "deciles") return deciles();
  if (name == "benefit") return benefit();
  if (name == "auc") return auc();
  if (name == "roc") return roc();
  if (name == "compare") return compare();
  if (name == "perturb") return perturb();
  if (name == "disagree") return disagree();
  if (name == "resample") return resample();
  if (name == "chart") return chart();
  throw Error(ErrorCode::invalid_argument, "unknown subcommand '" + name + "'");
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Gains, lift, and ROC evaluation of binary classifiers under a targeting budget", "liftkit"};
  app.fallthrough();
  app.require_subcommand(1);

  app.add_option("--input", opt.inputs, "Scored file (header row with label,score[,id]; or .jsonl)");
  app.add_option("--input-format", opt.input_format, "auto, csv, or jsonl");
  app.add_option("--delimiter", opt.delimiter, "Field delimiter for delimited input");
  app.add_option("--label-column", opt.label_column);
  app.add_option("--score-column", opt.score_column);
  app.add_option("--id-column", opt.id_column);
  app.add_option("--tie-policy", opt.tie_policy, "input, id, or expected")
      ->check(CLI::IsMember({"input", "id", "expected"}));
  app.add_option("--format", opt.format, "Output format: text, csv, or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--precision", opt.precision, "Decimals in text output");
  app.add_flag("--exact", opt.exact, "Print exact rationals");
  app.add_option("--n", opt.n, "Cutoff n (repeatable); for disagree, the set size N");
  app.add_option("--fraction", opt.fractions, "Cutoff as a fraction n/N (repeatable)");
  app.add_option("--qtp", opt.q_tp, "Net benefit per true positive");
  app.add_option("--qfp", opt.q_fp, "Net benefit per false positive");
  app.add_option("--rates", opt.rates, "Target positive rates, comma separated")->delimiter(',');
  app.add_option("--reps", opt.reps, "Replicates per rate");
  app.add_option("--size", opt.size, "Sample size");
  app.add_option("--seed", opt.seed, "Random seed");
  app.add_option("--out", opt.out, "Output file (default: standard output)");

  app.add_subcommand("gains", "Cumulative gains and p-CumGains per n");
  app.add_subcommand("lift", "Lift at --n / --fraction, or the whole lift curve");
  app.add_subcommand("deciles", "Decile lift");
  app.add_subcommand("benefit", "Cost-weighted cumulative benefit");
  auto* auc = app.add_subcommand("auc", "Area under the ROC curve");
  auc->add_option("--method", opt.method, "pairs or wilcoxon");
  app.add_subcommand("roc", "ROC points per distinct score");
  app.add_subcommand("compare", "Compare runs at target cutoffs");
  auto* perturb = app.add_subcommand("perturb", "Exchange labels at rank pairs");
  perturb->add_option("--swap", opt.swaps, "RANK:RANK (repeatable)");
  perturb->add_option("--preset", opt.preset, "higher-auc-lower-lift, lower-auc-higher-lift, lower-auc-same-lift");
  auto* disagree = app.add_subcommand("disagree", "Search for rankings two metrics order oppositely");
  disagree->add_option("--metric-a", opt.metric_a, "auc, accuracy@n, or lift@n")->required();
  disagree->add_option("--metric-b", opt.metric_b, "auc, accuracy@n, or lift@n")->required();
  disagree->add_option("--npos", opt.npos, "Positives in each arrangement");
  disagree->add_option("--max-swaps", opt.max_swaps, "Swap radius around --input");
  disagree->add_option("--budget", opt.budget, "Samples drawn when the space is too large to enumerate");
  disagree->add_option("--exhaustive-limit", opt.exhaustive_limit, "Largest space enumerated exhaustively");
  auto* resample = app.add_subcommand("resample", "Stratified resampling across positive rates");
  resample->add_option("--pool-pos", opt.pool_pos, "Synthetic pool positives (without --input)");
  resample->add_option("--pool-neg", opt.pool_neg, "Synthetic pool negatives (without --input)");
  resample->add_option("--separation", opt.separation, "Synthetic score separation");
  resample->add_option("--grid", opt.grid, "Grid points over n/N");
  resample->add_option("--threads", opt.threads, "Worker threads (0 = all cores)");
  resample->add_option("--small-fraction", opt.small_fraction, "n/N used by the regularity check");
  auto* chart = app.add_subcommand("chart", "Render an SVG chart");
  chart->add_option("--kind", opt.kind, "gains-count, gains-fraction, lift, decile-lift, benefit, roc");
  chart->add_option("--title", opt.title);
  chart->add_flag("--no-baseline", opt.no_baseline, "Omit the random-targeting line");
  chart->add_option("--x", opt.x_axis, "x axis for lift charts: count or fraction");

  auto help_for = [&] {
    for (auto* sub : app.get_subcommands()) return sub->help();
    return app.help();
  };
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << help_for();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << help_for();
    return kExitValidation;
  }

  try {
    Command cmd(opt, out);
    return cmd.run(app.get_subcommands().front()->get_name());
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::infeasible ? kExitInfeasible : kExitValidation;
  }
}

}  // namespace liftkit
