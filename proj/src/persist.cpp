#include "braidkc/persist.hpp"

#include <cinttypes>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "braidkc/version.hpp"

namespace braidkc {

using nlohmann::json;

RunConfig run_config_from(const EstimateConfig& cfg, uint64_t master_seed,
                          const std::string& relations) {
  RunConfig rc;
  rc.master_seed = master_seed;
  rc.n = cfg.n;
  rc.word_len = cfg.word_len;
  rc.samples = cfg.samples;
  rc.passes = cfg.passes;
  rc.chunk = cfg.chunk;
  rc.codec = cfg.mode == WidthMode::variable ? "variable" : "fixed";
  rc.strategy = cfg.strategy == PassStrategy::single_scan ? "single_scan" : "per_rule_sweep";
  rc.order_policy = cfg.randomize_order ? "randomized_per_sample" : "as_given";
  rc.relations = relations;
  return rc;
}

EstimateConfig estimate_config_from(const RunConfig& rc) {
  EstimateConfig cfg;
  cfg.n = rc.n;
  cfg.word_len = rc.word_len;
  cfg.samples = rc.samples;
  cfg.passes = rc.passes;
  cfg.chunk = rc.chunk;
  cfg.mode = rc.codec == "fixed" ? WidthMode::fixed : WidthMode::variable;
  cfg.strategy =
      rc.strategy == "per_rule_sweep" ? PassStrategy::per_rule_sweep : PassStrategy::single_scan;
  cfg.randomize_order = rc.order_policy == "randomized_per_sample";
  return cfg;
}

std::string iso8601_utc_now() {
  std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

ExperimentRecord make_record(const RunConfig& rc, const EstimateStats& stats,
                             const EstimateTiming& timing) {
  ExperimentRecord rec;
  char id[128];
  std::snprintf(id, sizeof id, "n%u-len%zu-s%u-p%u-seed%" PRIu64, rc.n, rc.word_len, rc.samples,
                rc.passes, rc.master_seed);
  rec.record_id = id;
  rec.timestamp = iso8601_utc_now();
  rec.artifact_version = kVersion;
  rec.config = rc;
  rec.stats = stats;
  rec.total_wall_s = timing.total_s;
  rec.sample_wall_s = timing.sample_s;
  return rec;
}

namespace {

json config_to_json(const RunConfig& rc) {
  return json{{"master_seed", rc.master_seed}, {"n", rc.n},
              {"word_len", rc.word_len},       {"samples", rc.samples},
              {"passes", rc.passes},           {"chunk", rc.chunk},
              {"codec", rc.codec},             {"strategy", rc.strategy},
              {"order_policy", rc.order_policy}, {"relations", rc.relations}};
}

RunConfig config_from_json(const json& j) {
  RunConfig rc;
  rc.master_seed = j.at("master_seed").get<uint64_t>();
  rc.n = j.at("n").get<uint32_t>();
  rc.word_len = j.at("word_len").get<size_t>();
  rc.samples = j.at("samples").get<uint32_t>();
  rc.passes = j.at("passes").get<uint32_t>();
  rc.chunk = j.at("chunk").get<size_t>();
  rc.codec = j.at("codec").get<std::string>();
  rc.strategy = j.at("strategy").get<std::string>();
  rc.order_policy = j.at("order_policy").get<std::string>();
  rc.relations = j.at("relations").get<std::string>();
  return rc;
}

}  // namespace

std::string record_to_json_line(const ExperimentRecord& rec) {
  json j{{"record_id", rec.record_id},
         {"timestamp", rec.timestamp},
         {"artifact_version", rec.artifact_version},
         {"config", config_to_json(rec.config)},
         {"samples", rec.stats.samples},
         {"stats",
          {{"max", rec.stats.max},
           {"min", rec.stats.min},
           {"mean", rec.stats.mean},
           {"stddev", rec.stats.stddev}}},
         {"total_wall_s", rec.total_wall_s},
         {"sample_wall_s", rec.sample_wall_s}};
  return j.dump();
}

ExperimentRecord record_from_json_line(const std::string& line) {
  json j = json::parse(line);
  ExperimentRecord rec;
  rec.record_id = j.at("record_id").get<std::string>();
  rec.timestamp = j.at("timestamp").get<std::string>();
  rec.artifact_version = j.at("artifact_version").get<std::string>();
  rec.config = config_from_json(j.at("config"));
  rec.stats.samples = j.at("samples").get<std::vector<double>>();
  rec.stats.max = j.at("stats").at("max").get<double>();
  rec.stats.min = j.at("stats").at("min").get<double>();
  rec.stats.mean = j.at("stats").at("mean").get<double>();
  rec.stats.stddev = j.at("stats").at("stddev").get<double>();
  rec.stats.n = rec.config.n;
  rec.stats.word_len = rec.config.word_len;
  rec.stats.passes = rec.config.passes;
  rec.total_wall_s = j.at("total_wall_s").get<double>();
  rec.sample_wall_s = j.at("sample_wall_s").get<std::vector<double>>();
  return rec;
}

ExperimentLog::ExperimentLog(const std::string& path) : path_(path) {
  out_.open(path, std::ios::app);
  if (!out_) throw std::runtime_error("cannot open experiment log: " + path);
}

void ExperimentLog::append(const ExperimentRecord& rec) {
  out_ << record_to_json_line(rec) << '\n';
  out_.flush();
  if (!out_) throw std::runtime_error("experiment log write failed: " + path_);
}

std::vector<ExperimentRecord> ExperimentLog::load(const std::string& path) {
  std::vector<ExperimentRecord> out;
  std::ifstream is(path);
  if (!is) return out;
  std::string line;
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(record_from_json_line(line));
    } catch (const std::exception&) {
      // Tolerate a truncated tail line from a killed writer; anything
      // malformed earlier is suspicious and rejected.
      if (is.peek() != EOF) throw;
    }
  }
  return out;
}

bool record_matches_sweep(const ExperimentRecord& rec, const RunConfig& sweep_config, uint32_t n) {
  RunConfig want = sweep_config;
  want.n = n;
  return rec.config == want && rec.artifact_version == kVersion;
}

void atomic_write_file(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open for writing: " + tmp);
    os << content;
    os.flush();
    if (!os) throw std::runtime_error("write failed: " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

namespace {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string sweep_table_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "n,mean,min,max,stddev,samples,len,passes\r\n";
  for (const auto& row : rows) {
    os << row.n << ',' << fmt_double(row.stats.mean) << ',' << fmt_double(row.stats.min) << ','
       << fmt_double(row.stats.max) << ',' << fmt_double(row.stats.stddev) << ','
       << row.stats.samples.size() << ',' << row.stats.word_len << ',' << row.stats.passes
       << "\r\n";
  }
  return os.str();
}

void export_csv(const std::vector<SweepRow>& rows, const std::string& path) {
  if (rows.empty()) throw std::invalid_argument("export_csv: empty table");
  atomic_write_file(path, sweep_table_csv(rows));
}

std::vector<SweepRow> parse_sweep_csv(std::istream& is) {
  std::vector<SweepRow> rows;
  std::string line;
  if (!std::getline(is, line)) throw std::runtime_error("sweep csv: empty file");
  while (std::getline(is, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    if (line.empty()) continue;
    SweepRow row;
    unsigned long long samples = 0, len = 0;
    double mean, mn, mx, sd;
    unsigned passes = 0;
    if (std::sscanf(line.c_str(), "%u,%lf,%lf,%lf,%lf,%llu,%llu,%u", &row.n, &mean, &mn, &mx, &sd,
                    &samples, &len, &passes) != 8) {
      throw std::runtime_error("sweep csv: malformed row '" + line + "'");
    }
    row.stats.mean = mean;
    row.stats.min = mn;
    row.stats.max = mx;
    row.stats.stddev = sd;
    row.stats.samples.assign(samples, 0.0);  // cardinality only
    row.stats.n = row.n;
    row.stats.word_len = len;
    row.stats.passes = passes;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<SweepRow> load_sweep_csv(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open: " + path);
  return parse_sweep_csv(is);
}

}  // namespace braidkc
