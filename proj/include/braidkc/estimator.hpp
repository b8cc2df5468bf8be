#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "braidkc/lzw.hpp"
#include "braidkc/relations.hpp"
#include "braidkc/rewrite.hpp"
#include "braidkc/rng.hpp"
#include "braidkc/word.hpp"

namespace braidkc {

// Four-number summary of quotient estimates over one sample set.
struct EstimateStats {
  double max = 0;
  double min = 0;
  double mean = 0;
  double stddev = 0;               // sample standard deviation (divisor N-1)
  std::vector<double> samples;     // sorted ascending
  uint32_t n = 0;
  size_t word_len = 0;
  uint32_t passes = 0;
};

// Degenerate sample: the quotient's denominator vanished.
struct UndefinedSampleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EstimationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EstimateConfig {
  uint32_t n = 0;
  size_t word_len = 0;
  uint32_t samples = 0;
  uint32_t passes = 1;
  size_t chunk = kDefaultChunk;
  WidthMode mode = WidthMode::variable;
  PassStrategy strategy = PassStrategy::single_scan;
  bool randomize_order = true;  // fresh uniform rule order per sample
  unsigned threads = 1;
};

struct EstimateTiming {
  double total_s = 0;
  std::vector<double> sample_s;
};

// Per-sample stream derivation: sample k of parameter n draws from
// stream (n << 20) | k of the master seed; the word uses substream 0 and
// the rule shuffle substream 1. Samples are therefore independent of
// execution order and thread count.
Rng sample_rng(uint64_t master_seed, uint32_t n, uint32_t sample_index);

// (circ(w) - circ(reduce(w))) / (circ(w) - circ(const)). Throws
// UndefinedSampleError when the denominator is zero.
double quotient_sample(const Word& w, const RelationSet& rs, uint32_t passes, size_t chunk,
                       WidthMode mode = WidthMode::variable,
                       PassStrategy strategy = PassStrategy::single_scan);

using SampleProgress = std::function<void(uint32_t sample_index, double value)>;

// Draws cfg.samples random words and aggregates their quotients. Undefined
// samples are dropped; throws EstimationError if none survive. `progress`
// fires per finished sample (possibly from worker threads).
EstimateStats estimate(const EstimateConfig& cfg, const RelationSet& base, uint64_t master_seed,
                       EstimateTiming* timing = nullptr,
                       const SampleProgress& progress = nullptr);

EstimateStats stats_from_samples(std::vector<double> samples);

struct SweepRow {
  uint32_t n = 0;
  EstimateStats stats;
  EstimateTiming timing;
};

struct SweepResult {
  std::vector<SweepRow> rows;  // ascending n
  std::vector<std::pair<uint32_t, std::string>> failures;
};

using RelationFactory = std::function<RelationSet(uint32_t)>;
using SweepSink = std::function<void(const SweepRow&)>;
using SweepSkip = std::function<bool(uint32_t)>;

// One estimate per n. `skip` lets a resumed run bypass finished values;
// `sink` is called after each fresh row so progress is never lost.
// Per-n failures are recorded and the sweep continues.
SweepResult sweep(const std::vector<uint32_t>& n_values, const EstimateConfig& cfg,
                  uint64_t master_seed, const RelationFactory& relations = nullptr,
                  const SweepSink& sink = nullptr, const SweepSkip& skip = nullptr);

}  // namespace braidkc
