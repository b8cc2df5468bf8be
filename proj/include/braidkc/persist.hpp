#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "braidkc/estimator.hpp"

namespace braidkc {

// Everything needed to re-run one estimate and get the same numbers back.
struct RunConfig {
  uint64_t master_seed = 0;
  uint32_t n = 0;
  size_t word_len = 0;
  uint32_t samples = 0;
  uint32_t passes = 1;
  size_t chunk = kDefaultChunk;
  std::string codec = "variable";        // lzw width mode
  std::string strategy = "single_scan";  // pass strategy
  std::string order_policy = "randomized_per_sample";
  std::string relations = "braid";       // "braid" or a custom rules path

  bool operator==(const RunConfig&) const = default;
};

RunConfig run_config_from(const EstimateConfig& cfg, uint64_t master_seed,
                          const std::string& relations = "braid");
EstimateConfig estimate_config_from(const RunConfig& rc);

struct ExperimentRecord {
  std::string record_id;
  std::string timestamp;  // ISO-8601 UTC
  std::string artifact_version;
  RunConfig config;
  EstimateStats stats;    // stats.samples sorted ascending
  double total_wall_s = 0;
  std::vector<double> sample_wall_s;
};

ExperimentRecord make_record(const RunConfig& rc, const EstimateStats& stats,
                             const EstimateTiming& timing);

std::string record_to_json_line(const ExperimentRecord& rec);
ExperimentRecord record_from_json_line(const std::string& line);

// Append-only JSON-lines log. Each record is written as one complete line
// and flushed, so a killed run leaves at most one garbage tail line, which
// load() drops.
class ExperimentLog {
 public:
  explicit ExperimentLog(const std::string& path);
  void append(const ExperimentRecord& rec);
  const std::string& path() const { return path_; }

  static std::vector<ExperimentRecord> load(const std::string& path);

 private:
  std::string path_;
  std::ofstream out_;
};

// True when rec came from the same sweep configuration (same everything
// except n).
bool record_matches_sweep(const ExperimentRecord& rec, const RunConfig& sweep_config, uint32_t n);

// Writes content to path via a temp file + rename.
void atomic_write_file(const std::string& path, const std::string& content);

// RFC-4180 CSV with header n,mean,min,max,stddev,samples,len,passes.
std::string sweep_table_csv(const std::vector<SweepRow>& rows);
void export_csv(const std::vector<SweepRow>& rows, const std::string& path);
std::vector<SweepRow> parse_sweep_csv(std::istream& is);
std::vector<SweepRow> load_sweep_csv(const std::string& path);

std::string iso8601_utc_now();

}  // namespace braidkc
