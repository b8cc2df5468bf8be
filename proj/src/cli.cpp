#include "braidkc/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <mutex>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "braidkc/analysis.hpp"
#include "braidkc/estimator.hpp"
#include "braidkc/parallel.hpp"
#include "braidkc/fitting.hpp"
#include "braidkc/lzw.hpp"
#include "braidkc/persist.hpp"
#include "braidkc/relations.hpp"
#include "braidkc/rewrite.hpp"
#include "braidkc/theory.hpp"
#include "braidkc/version.hpp"
#include "braidkc/word.hpp"

namespace braidkc {

namespace {

using nlohmann::json;

struct CliError : std::runtime_error {
  int code;
  CliError(int code_, const std::string& msg) : std::runtime_error(msg), code(code_) {}
};

void require_file(const std::string& path) {
  if (!std::filesystem::exists(path)) throw CliError(kExitFile, "no such file: " + path);
}

void emit_json(const std::string& out_path, const json& j) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    atomic_write_file(out_path, j.dump(2) + "\n");
  }
}

WidthMode parse_mode(const std::string& s) {
  if (s == "variable") return WidthMode::variable;
  if (s == "fixed") return WidthMode::fixed;
  throw CliError(kExitConfig, "mode must be 'variable' or 'fixed', got '" + s + "'");
}

PassStrategy parse_strategy(const std::string& s) {
  if (s == "scan" || s == "single_scan") return PassStrategy::single_scan;
  if (s == "sweep" || s == "per_rule_sweep") return PassStrategy::per_rule_sweep;
  throw CliError(kExitConfig, "strategy must be 'scan' or 'sweep', got '" + s + "'");
}

std::vector<uint32_t> parse_u32_list(const std::string& s, const char* what) {
  std::vector<uint32_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(static_cast<uint32_t>(std::stoul(item)));
    } catch (const std::exception&) {
      throw CliError(kExitConfig, std::string(what) + ": bad integer '" + item + "'");
    }
  }
  if (out.empty()) throw CliError(kExitConfig, std::string(what) + ": empty list");
  return out;
}

RelationSet load_rules_or_braid(const std::string& rules_path, uint32_t n) {
  if (rules_path.empty()) return braid_relations(n);
  require_file(rules_path);
  return load_relations(rules_path, n);
}

json report_to_json(const ReductionReport& r) {
  return json{{"passes_run", r.passes_run},
              {"applications_per_pass", r.applications_per_pass},
              {"chunk_size", r.chunk_size},
              {"wall_s", r.wall_time.count()},
              {"fixed_point", r.reached_fixed_point()}};
}

json stats_to_json(const EstimateStats& s) {
  return json{{"n", s.n},       {"word_len", s.word_len}, {"passes", s.passes},
              {"max", s.max},   {"min", s.min},           {"mean", s.mean},
              {"stddev", s.stddev}, {"samples", s.samples}};
}

json frequency_to_json(const FrequencyStats& f) {
  json hist = json::object();
  for (const auto& [len, count] : f.histogram) hist[std::to_string(len)] = count;
  return json{{"empty", f.empty},
              {"max", f.max},
              {"min", f.min},
              {"mean", f.mean},
              {"stddev", f.stddev},
              {"distinct_strings", f.distinct_strings},
              {"repeated_max", f.repeated_max},
              {"repeated_min", f.repeated_min},
              {"repeated_mean", f.repeated_mean},
              {"repeated_stddev", f.repeated_stddev},
              {"repeated_distinct", f.repeated_distinct},
              {"length_one_count", f.length_one_count},
              {"histogram", hist}};
}

// ---- subcommand state ----

struct GenArgs {
  uint32_t n = 10;
  size_t len = 0;
  uint64_t seed = 0;
  uint64_t stream = 0;
  std::string out;
};

struct RelationsArgs {
  uint32_t n = 0;
  std::string order = "canonical";
  uint64_t seed = 0;
  std::string out;
};

struct ReduceArgs {
  std::string in, rules, out, report;
  std::string order = "as-given";
  uint64_t order_seed = 0;
  uint32_t passes = 1;
  size_t chunk = kDefaultChunk;
  std::string strategy = "scan";
  bool until_fixed = false;
  uint32_t max_passes = kDefaultMaxPasses;
  unsigned threads = 0;
};

struct CompressArgs {
  std::string in, trace, out;
  std::string mode = "variable";
  bool verify = false;
};

struct EstimateArgs {
  uint32_t n = 10;
  size_t len = 100000;
  uint32_t samples = 10;
  uint32_t passes = 1;
  uint64_t seed = 0;
  size_t chunk = kDefaultChunk;
  std::string mode = "variable";
  std::string strategy = "scan";
  std::string rules;
  bool keep_order = false;
  unsigned threads = 0;
  std::string out, log;
};

struct SweepArgs {
  uint32_t n_from = 3, n_to = 0, n_step = 1;
  std::string n_list;
  size_t len = 100000;
  uint32_t samples = 5;
  uint32_t passes = 1;
  uint64_t seed = 0;
  size_t chunk = kDefaultChunk;
  std::string mode = "variable";
  std::string strategy = "scan";
  unsigned threads = 0;
  std::string log, csv, out;
  bool resume = false;
};

struct FitArgs {
  std::string family;
  std::string in;
  bool all_samples = false;
  std::string init;
  std::string out;
};

struct AnalyzeArgs {
  std::string in, rules, out, hist_csv;
  uint64_t order_seed = 0;
  bool shuffle_order = false;
  std::string checkpoints = "0,1";
  size_t count = 500;
  std::string region = "middle";
  size_t region_begin = 0, region_end = 0;
  bool no_terminator = false;
  uint32_t start_token = 0;
  size_t chunk = 0;
  std::string strategy = "scan";
  unsigned threads = 0;
};

struct TheoryArgs {
  uint32_t n = 0;
  double c = 4.0;
  double delta = 0.1;
  double len = 1e6;
  double c_prime = 0;
  double q = 0;
  std::string out;
};

int cmd_gen(const GenArgs& a) {
  Word w = random_word(a.n, a.len, Rng(a.seed, a.stream));
  std::ostringstream os;
  write_word(os, w);
  atomic_write_file(a.out, os.str());
  std::cerr << "wrote " << a.out << " (n=" << a.n << ", len=" << a.len << ")\n";
  return kExitOk;
}

int cmd_relations(const RelationsArgs& a) {
  RelationSet rs = braid_relations(a.n);
  if (a.order == "random") {
    rs = randomize_order(rs, Rng(a.seed, 0));
    rs.order_policy.seed = a.seed;
  } else if (a.order != "canonical") {
    throw CliError(kExitConfig, "order must be 'canonical' or 'random'");
  }
  if (a.out.empty()) {
    write_relations(std::cout, rs);
  } else {
    std::ostringstream os;
    write_relations(os, rs);
    atomic_write_file(a.out, os.str());
  }
  return kExitOk;
}

int cmd_reduce(const ReduceArgs& a) {
  require_file(a.in);
  Word w = load_word(a.in);
  RelationSet rs = load_rules_or_braid(a.rules, w.n);
  if (a.order == "random") {
    rs = randomize_order(rs, Rng(a.order_seed, 0));
    rs.order_policy.seed = a.order_seed;
  } else if (a.order != "as-given") {
    throw CliError(kExitConfig, "order must be 'as-given' or 'random'");
  }
  unsigned threads = a.threads ? a.threads : thread_budget();
  PassStrategy strategy = parse_strategy(a.strategy);

  Word reduced;
  ReductionReport report;
  if (a.until_fixed) {
    std::tie(reduced, report) = reduce_until_fixed(w, rs, a.max_passes, a.chunk, strategy, threads);
  } else {
    std::tie(reduced, report) = reduce(w, rs, a.passes, a.chunk, strategy, threads);
  }

  std::ostringstream os;
  write_word(os, reduced);
  atomic_write_file(a.out, os.str());
  if (!a.report.empty()) emit_json(a.report, report_to_json(report));
  std::cerr << "reduced " << a.in << ": passes=" << report.passes_run
            << " applications=" << json(report.applications_per_pass).dump() << "\n";
  return kExitOk;
}

int cmd_compress(const CompressArgs& a) {
  require_file(a.in);
  Word w = load_word(a.in);
  WidthMode mode = parse_mode(a.mode);
  StringTable table;
  CodeSequence cs = lzw_compress(std::span<const Token>(w.tokens), std::max(w.n, 1u), mode,
                                 a.trace.empty() ? nullptr : &table);
  if (a.verify) {
    auto back = lzw_decompress(cs);
    if (back != w.tokens) throw CliError(kExitData, "round-trip verification failed");
  }
  if (!a.trace.empty()) {
    std::ostringstream os;
    os << "code,string\r\n";
    for (const auto& e : table.entries) {
      os << e.code << ",";
      for (size_t i = 0; i < e.tokens.size(); ++i) os << (i ? " " : "") << e.tokens[i];
      os << "\r\n";
    }
    atomic_write_file(a.trace, os.str());
  }
  json j{{"n", w.n},
         {"len", w.size()},
         {"mode", a.mode},
         {"codes", cs.codes.size()},
         {"bit_length", cs.bit_length},
         {"bits_per_token", w.size() ? static_cast<double>(cs.bit_length) / w.size() : 0.0},
         {"verified", a.verify}};
  emit_json(a.out, j);
  return kExitOk;
}

EstimateConfig estimate_config(uint32_t n, size_t len, uint32_t samples, uint32_t passes,
                               size_t chunk, const std::string& mode, const std::string& strategy,
                               bool keep_order, unsigned threads) {
  EstimateConfig cfg;
  cfg.n = n;
  cfg.word_len = len;
  cfg.samples = samples;
  cfg.passes = passes;
  cfg.chunk = chunk;
  cfg.mode = parse_mode(mode);
  cfg.strategy = parse_strategy(strategy);
  cfg.randomize_order = !keep_order;
  cfg.threads = threads ? threads : thread_budget();
  return cfg;
}

int cmd_estimate(const EstimateArgs& a) {
  if (a.n < 2) throw CliError(kExitConfig, "estimate: need n >= 2");
  EstimateConfig cfg = estimate_config(a.n, a.len, a.samples, a.passes, a.chunk, a.mode,
                                       a.strategy, a.keep_order, a.threads);
  RelationSet base = load_rules_or_braid(a.rules, a.n);

  std::mutex mu;
  auto progress = [&](uint32_t k, double v) {
    std::lock_guard lock(mu);
    std::cerr << "[estimate n=" << a.n << "] sample " << (k + 1) << "/" << a.samples << ": " << v
              << "\n";
  };
  EstimateTiming timing;
  EstimateStats stats = estimate(cfg, base, a.seed, &timing, progress);

  RunConfig rc = run_config_from(cfg, a.seed, a.rules.empty() ? "braid" : a.rules);
  ExperimentRecord rec = make_record(rc, stats, timing);
  if (!a.log.empty()) ExperimentLog(a.log).append(rec);
  emit_json(a.out, json::parse(record_to_json_line(rec)));
  return kExitOk;
}

int cmd_sweep(const SweepArgs& a) {
  std::vector<uint32_t> n_values;
  if (!a.n_list.empty()) {
    n_values = parse_u32_list(a.n_list, "--n-list");
  } else {
    if (a.n_to < a.n_from) throw CliError(kExitConfig, "sweep: need --n-to >= --n-from");
    for (uint32_t n = a.n_from; n <= a.n_to; n += a.n_step) n_values.push_back(n);
  }
  for (uint32_t n : n_values) {
    if (n < 3) throw CliError(kExitConfig, "sweep: all n must be >= 3");
  }
  EstimateConfig cfg = estimate_config(0, a.len, a.samples, a.passes, a.chunk, a.mode, a.strategy,
                                       false, a.threads);
  RunConfig sweep_rc = run_config_from(cfg, a.seed);

  std::vector<SweepRow> prior;
  if (a.resume) {
    if (a.log.empty()) throw CliError(kExitConfig, "sweep: --resume requires --log");
    for (const auto& rec : ExperimentLog::load(a.log)) {
      for (uint32_t n : n_values) {
        if (record_matches_sweep(rec, sweep_rc, n)) {
          SweepRow row;
          row.n = n;
          row.stats = rec.stats;
          row.timing.total_s = rec.total_wall_s;
          row.timing.sample_s = rec.sample_wall_s;
          prior.push_back(std::move(row));
          break;
        }
      }
    }
  }
  auto already_done = [&](uint32_t n) {
    for (const auto& row : prior) {
      if (row.n == n) return true;
    }
    return false;
  };

  std::optional<ExperimentLog> log;
  if (!a.log.empty()) log.emplace(a.log);
  auto sink = [&](const SweepRow& row) {
    RunConfig rc = sweep_rc;
    rc.n = row.n;
    if (log) log->append(make_record(rc, row.stats, row.timing));
    std::cerr << "[sweep] n=" << row.n << " mean=" << row.stats.mean << " ["
              << row.stats.min << ", " << row.stats.max << "] stddev=" << row.stats.stddev
              << " (" << row.timing.total_s << " s)\n";
  };

  SweepResult result = sweep(n_values, cfg, a.seed, nullptr, sink, already_done);
  for (auto& row : prior) result.rows.push_back(std::move(row));
  std::sort(result.rows.begin(), result.rows.end(),
            [](const SweepRow& x, const SweepRow& y) { return x.n < y.n; });

  for (const auto& [n, what] : result.failures) {
    std::cerr << "[sweep] n=" << n << " FAILED: " << what << "\n";
  }
  if (!a.csv.empty() && !result.rows.empty()) export_csv(result.rows, a.csv);

  json rows = json::array();
  for (const auto& row : result.rows) rows.push_back(stats_to_json(row.stats));
  json j{{"rows", rows}, {"failures", json::array()}};
  for (const auto& [n, what] : result.failures) j["failures"].push_back({{"n", n}, {"error", what}});
  emit_json(a.out, j);
  return result.failures.empty() ? kExitOk : kExitData;
}

int cmd_fit(const FitArgs& a) {
  require_file(a.in);
  std::vector<FitPoint> points;
  if (a.in.size() > 6 && a.in.substr(a.in.size() - 6) == ".jsonl") {
    for (const auto& rec : ExperimentLog::load(a.in)) {
      if (a.all_samples) {
        for (double v : rec.stats.samples) points.emplace_back(rec.config.n, v);
      } else {
        points.emplace_back(rec.config.n, rec.stats.mean);
      }
    }
  } else {
    if (a.all_samples) {
      throw CliError(kExitConfig, "fit: --all-samples needs a .jsonl input (csv has means only)");
    }
    for (const auto& row : load_sweep_csv(a.in)) points.emplace_back(row.n, row.stats.mean);
  }
  if (points.empty()) throw CliError(kExitData, "fit: no points in " + a.in);

  FitResult fr;
  if (a.family == "inverse_n") {
    fr = fit_inverse_n(points);
  } else if (a.family == "exp_power") {
    std::array<double, 4> init = default_exp_power_init(points);
    if (!a.init.empty()) {
      std::stringstream ss(a.init);
      std::string item;
      size_t i = 0;
      while (std::getline(ss, item, ',') && i < 4) init[i++] = std::stod(item);
      if (i != 4) throw CliError(kExitConfig, "fit: --init needs 4 comma-separated values");
    }
    fr = fit_exp_power(points, init);
  } else {
    throw CliError(kExitConfig, "fit: family must be 'inverse_n' or 'exp_power'");
  }

  json j{{"family", a.family},     {"params", fr.params},
         {"rss", fr.rss},          {"r_squared", fr.r_squared},
         {"points_used", fr.points_used}, {"converged", fr.converged}};
  if (!fr.std_errors.empty()) j["std_errors"] = fr.std_errors;
  if (!fr.identifiable.empty()) {
    j["identifiable"] = fr.identifiable;
    j["grad_norm"] = fr.grad_norm;
  }
  emit_json(a.out, j);
  return kExitOk;
}

int cmd_analyze(const AnalyzeArgs& a) {
  require_file(a.in);
  Word w = load_word(a.in);
  RelationSet rs = load_rules_or_braid(a.rules, w.n);
  if (a.shuffle_order) rs = randomize_order(rs, Rng(a.order_seed, 0));

  ExtractOptions opt;
  opt.count = a.count;
  opt.include_terminator = !a.no_terminator;
  opt.start_token = a.start_token;
  if (a.region == "middle") {
    opt.region_begin = w.size() / 3;
    opt.region_end = 2 * w.size() / 3;
  } else if (a.region == "full") {
    opt.region_begin = 0;
    opt.region_end = 0;
  } else if (a.region == "explicit") {
    opt.region_begin = a.region_begin;
    opt.region_end = a.region_end;
  } else {
    throw CliError(kExitConfig, "region must be 'middle', 'full' or 'explicit'");
  }

  auto checkpoints = parse_u32_list(a.checkpoints, "--checkpoints");
  unsigned threads = a.threads ? a.threads : thread_budget();
  auto profile =
      pass_profile(w, rs, checkpoints, opt, a.chunk, parse_strategy(a.strategy), threads);

  json arr = json::array();
  for (const auto& [passes, fs] : profile) {
    arr.push_back(json{{"passes", passes}, {"stats", frequency_to_json(fs)}});
    if (!a.hist_csv.empty()) {
      std::ostringstream os;
      os << "length,count\r\n";
      for (const auto& [len, count] : fs.histogram) os << len << "," << count << "\r\n";
      atomic_write_file(a.hist_csv + "_" + std::to_string(passes) + ".csv", os.str());
    }
  }
  json j{{"word", a.in},
         {"n", w.n},
         {"len", w.size()},
         {"count", a.count},
         {"include_terminator", opt.include_terminator},
         {"checkpoints", arr}};
  emit_json(a.out, j);
  return kExitOk;
}

int cmd_theory(const TheoryArgs& a) {
  if (a.n < 2) throw CliError(kExitConfig, "theory: need n >= 2");
  BufferModel bm = braid_buffer_model(a.n, a.c, a.delta, a.len);
  auto [c_free, c_const] = theoretical_complexities(a.n, a.len);
  json j{{"n", a.n},
         {"c", a.c},
         {"delta", a.delta},
         {"word_len", a.len},
         {"p", bm.p},
         {"h", bm.h},
         {"compression_feasible", compression_feasible(bm)},
         {"h_in_admissible_range", h_in_admissible_range(bm)},
         {"predicted_quotient", predicted_quotient(bm)},
         {"c_free", c_free},
         {"c_const", c_const}};
  if (a.n >= 3 && a.c_prime > 0) j["braid_band_envelope"] = braid_band_envelope(a.n, a.c_prime);
  if (a.q > 0) j["general_band"] = general_band(a.n, a.q);
  emit_json(a.out, j);
  return kExitOk;
}

}  // namespace

int run_command(int argc, const char* const* argv) {
  CLI::App app{"braid-word complexity experiments"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "generate a random positive word");
  gen->add_option("--n", gen_args.n, "alphabet size")->required();
  gen->add_option("--len", gen_args.len, "word length")->required();
  gen->add_option("--seed", gen_args.seed, "master seed")->required();
  gen->add_option("--stream", gen_args.stream, "stream id (default 0)");
  gen->add_option("--out", gen_args.out, "output word file")->required();

  RelationsArgs rel_args;
  auto* rel = app.add_subcommand("relations", "emit braid relations");
  rel->add_option("--n", rel_args.n, "number of generators")->required();
  rel->add_option("--order", rel_args.order, "canonical|random");
  rel->add_option("--seed", rel_args.seed, "shuffle seed (with --order random)");
  rel->add_option("--out", rel_args.out, "output rules file (default stdout)");

  ReduceArgs red_args;
  auto* red = app.add_subcommand("reduce", "apply relations to a word");
  red->add_option("--in", red_args.in, "input word file")->required();
  red->add_option("--rules", red_args.rules, "rules file (default: braid relations)");
  red->add_option("--order", red_args.order, "as-given|random");
  red->add_option("--order-seed", red_args.order_seed, "shuffle seed (with --order random)");
  red->add_option("--passes", red_args.passes, "number of passes");
  red->add_option("--chunk", red_args.chunk, "chunk size, 0 = whole word");
  red->add_option("--strategy", red_args.strategy, "scan|sweep");
  red->add_flag("--until-fixed", red_args.until_fixed, "iterate until fixed point");
  red->add_option("--max-passes", red_args.max_passes, "pass cap for --until-fixed");
  red->add_option("--threads", red_args.threads, "worker threads (default BRAIDKC_THREADS)");
  red->add_option("--report", red_args.report, "reduction report JSON path");
  red->add_option("--out", red_args.out, "output word file")->required();

  CompressArgs comp_args;
  auto* comp = app.add_subcommand("compress", "LZW-compress a word and measure bits");
  comp->add_option("--in", comp_args.in, "input word file")->required();
  comp->add_option("--mode", comp_args.mode, "variable|fixed");
  comp->add_option("--trace", comp_args.trace, "string-table trace CSV path");
  comp->add_flag("--verify", comp_args.verify, "decompress and compare");
  comp->add_option("--out", comp_args.out, "summary JSON path (default stdout)");

  EstimateArgs est_args;
  auto* est = app.add_subcommand("estimate", "quotient complexity estimate for one n");
  est->add_option("--n", est_args.n, "alphabet size")->required();
  est->add_option("--len", est_args.len, "word length");
  est->add_option("--samples", est_args.samples, "number of random words");
  est->add_option("--passes", est_args.passes, "reduction passes");
  est->add_option("--seed", est_args.seed, "master seed")->required();
  est->add_option("--chunk", est_args.chunk, "chunk size, 0 = whole word");
  est->add_option("--mode", est_args.mode, "variable|fixed");
  est->add_option("--strategy", est_args.strategy, "scan|sweep");
  est->add_option("--rules", est_args.rules, "custom rules file (default: braid)");
  est->add_flag("--keep-order", est_args.keep_order, "do not randomize rule order per sample");
  est->add_option("--threads", est_args.threads, "worker threads");
  est->add_option("--out", est_args.out, "stats JSON path (default stdout)");
  est->add_option("--log", est_args.log, "append record to this JSONL log");

  SweepArgs sw_args;
  auto* sw = app.add_subcommand("sweep", "estimates across a range of n");
  sw->add_option("--n-from", sw_args.n_from, "first n");
  sw->add_option("--n-to", sw_args.n_to, "last n");
  sw->add_option("--n-step", sw_args.n_step, "step");
  sw->add_option("--n-list", sw_args.n_list, "comma-separated n values (overrides range)");
  sw->add_option("--len", sw_args.len, "word length");
  sw->add_option("--samples", sw_args.samples, "samples per n");
  sw->add_option("--passes", sw_args.passes, "reduction passes");
  sw->add_option("--seed", sw_args.seed, "master seed")->required();
  sw->add_option("--chunk", sw_args.chunk, "chunk size, 0 = whole word");
  sw->add_option("--mode", sw_args.mode, "variable|fixed");
  sw->add_option("--strategy", sw_args.strategy, "scan|sweep");
  sw->add_option("--threads", sw_args.threads, "worker threads");
  sw->add_option("--log", sw_args.log, "JSONL experiment log (appended per n)");
  sw->add_flag("--resume", sw_args.resume, "skip n values already in --log");
  sw->add_option("--csv", sw_args.csv, "export final table as CSV");
  sw->add_option("--out", sw_args.out, "table JSON path (default stdout)");

  FitArgs fit_args;
  auto* fit = app.add_subcommand("fit", "fit a model family to sweep output");
  fit->add_option("--family", fit_args.family, "inverse_n|exp_power")->required();
  fit->add_option("--in", fit_args.in, "sweep CSV or JSONL log")->required();
  fit->add_flag("--all-samples", fit_args.all_samples, "fit all samples, not means (jsonl)");
  fit->add_option("--init", fit_args.init, "a,b,c,d initial guess (exp_power)");
  fit->add_option("--out", fit_args.out, "fit JSON path (default stdout)");

  AnalyzeArgs an_args;
  auto* an = app.add_subcommand("analyze", "decreasing-string frequency profile");
  an->add_option("--in", an_args.in, "input word file")->required();
  an->add_option("--rules", an_args.rules, "rules file (default: braid relations)");
  an->add_flag("--shuffle-order", an_args.shuffle_order, "randomize rule order");
  an->add_option("--order-seed", an_args.order_seed, "shuffle seed");
  an->add_option("--checkpoints", an_args.checkpoints, "comma-separated pass counts");
  an->add_option("--count", an_args.count, "strings to extract per checkpoint");
  an->add_option("--region", an_args.region, "middle|full|explicit");
  an->add_option("--region-begin", an_args.region_begin, "scan-start begin (explicit)");
  an->add_option("--region-end", an_args.region_end, "scan-start end (explicit)");
  an->add_flag("--no-terminator", an_args.no_terminator, "drop the run-breaking token");
  an->add_option("--start-token", an_args.start_token, "run start token (default n)");
  an->add_option("--chunk", an_args.chunk, "chunk size for reductions");
  an->add_option("--strategy", an_args.strategy, "scan|sweep");
  an->add_option("--threads", an_args.threads, "worker threads");
  an->add_option("--out", an_args.out, "profile JSON path (default stdout)");
  an->add_option("--hist-csv", an_args.hist_csv, "histogram CSV path prefix");

  TheoryArgs th_args;
  auto* th = app.add_subcommand("theory", "band predictions from the buffer model");
  th->add_option("--n", th_args.n, "number of generators")->required();
  th->add_option("--c", th_args.c, "max decreasing-string length constant");
  th->add_option("--delta", th_args.delta, "band parameter in (0,1)");
  th->add_option("--len", th_args.len, "word length for feasibility");
  th->add_option("--c-prime", th_args.c_prime, "envelope constant (adds envelope output)");
  th->add_option("--q", th_args.q, "q(n) value (adds general band output)");
  th->add_option("--out", th_args.out, "JSON path (default stdout)");

  try {
    app.parse(argc, argv);
    if (*gen) return cmd_gen(gen_args);
    if (*rel) return cmd_relations(rel_args);
    if (*red) return cmd_reduce(red_args);
    if (*comp) return cmd_compress(comp_args);
    if (*est) return cmd_estimate(est_args);
    if (*sw) return cmd_sweep(sw_args);
    if (*fit) return cmd_fit(fit_args);
    if (*an) return cmd_analyze(an_args);
    if (*th) return cmd_theory(th_args);
    throw CliError(kExitUsage, "no subcommand");
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << json{{"error", e.what()}, {"code", kExitUsage}}.dump() << "\n";
    return kExitUsage;
  } catch (const CliError& e) {
    std::cerr << json{{"error", e.what()}, {"code", e.code}}.dump() << "\n";
    return e.code;
  } catch (const std::invalid_argument& e) {
    std::cerr << json{{"error", e.what()}, {"code", kExitConfig}}.dump() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", e.what()}, {"code", kExitData}}.dump() << "\n";
    return kExitData;
  }
}

}  // namespace braidkc
