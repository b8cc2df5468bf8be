#include "braidkc/estimator.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "braidkc/parallel.hpp"

namespace braidkc {

Rng sample_rng(uint64_t master_seed, uint32_t n, uint32_t sample_index) {
  return Rng(master_seed, (static_cast<uint64_t>(n) << 20) | sample_index);
}

double quotient_sample(const Word& w, const RelationSet& rs, uint32_t passes, size_t chunk,
                       WidthMode mode, PassStrategy strategy) {
  uint64_t c_free = circ(w, mode);
  auto [reduced, report] = reduce(w, rs, passes, chunk, strategy);
  uint64_t c_braided = circ(reduced, mode);
  uint64_t c_const = circ(const_word(w.n, w.size()), mode);
  if (c_free == c_const) {
    throw UndefinedSampleError("quotient denominator is zero (word too short)");
  }
  double num = static_cast<double>(c_free) - static_cast<double>(c_braided);
  double den = static_cast<double>(c_free) - static_cast<double>(c_const);
  return num / den;
}

EstimateStats stats_from_samples(std::vector<double> samples) {
  std::sort(samples.begin(), samples.end());
  EstimateStats s;
  s.min = samples.front();
  s.max = samples.back();
  double sum = 0;
  for (double v : samples) sum += v;
  s.mean = sum / static_cast<double>(samples.size());
  if (samples.size() > 1) {
    double ss = 0;
    for (double v : samples) ss += (v - s.mean) * (v - s.mean);
    s.stddev = std::sqrt(ss / static_cast<double>(samples.size() - 1));
  }
  s.samples = std::move(samples);
  return s;
}

EstimateStats estimate(const EstimateConfig& cfg, const RelationSet& base, uint64_t master_seed,
                       EstimateTiming* timing, const SampleProgress& progress) {
  if (cfg.samples < 1) throw std::invalid_argument("estimate: samples must be >= 1");
  if (cfg.n != base.n) throw std::invalid_argument("estimate: config n != relation set n");
  auto t0 = std::chrono::steady_clock::now();

  std::vector<double> values(cfg.samples, std::numeric_limits<double>::quiet_NaN());
  std::vector<double> wall(cfg.samples, 0);

  parallel_for(cfg.samples, cfg.threads, [&](size_t k) {
    auto s0 = std::chrono::steady_clock::now();
    Rng rng = sample_rng(master_seed, cfg.n, static_cast<uint32_t>(k));
    Word w = random_word(cfg.n, cfg.word_len, rng.split(0));
    RelationSet rs = cfg.randomize_order ? randomize_order(base, rng.split(1)) : base;
    try {
      values[k] = quotient_sample(w, rs, cfg.passes, cfg.chunk, cfg.mode, cfg.strategy);
    } catch (const UndefinedSampleError&) {
      // dropped below
    }
    wall[k] = std::chrono::duration<double>(std::chrono::steady_clock::now() - s0).count();
    if (progress) progress(static_cast<uint32_t>(k), values[k]);
  });

  std::vector<double> valid;
  valid.reserve(cfg.samples);
  for (double v : values) {
    if (!std::isnan(v)) valid.push_back(v);
  }
  if (valid.empty()) throw EstimationError("all samples undefined (degenerate configuration)");

  EstimateStats s = stats_from_samples(std::move(valid));
  s.n = cfg.n;
  s.word_len = cfg.word_len;
  s.passes = cfg.passes;
  if (timing) {
    timing->sample_s = std::move(wall);
    timing->total_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
  return s;
}

SweepResult sweep(const std::vector<uint32_t>& n_values, const EstimateConfig& cfg,
                  uint64_t master_seed, const RelationFactory& relations, const SweepSink& sink,
                  const SweepSkip& skip) {
  SweepResult result;
  for (uint32_t n : n_values) {
    if (skip && skip(n)) continue;
    try {
      RelationSet base = relations ? relations(n) : braid_relations(n);
      EstimateConfig c = cfg;
      c.n = n;
      SweepRow row;
      row.n = n;
      row.stats = estimate(c, base, master_seed, &row.timing);
      if (sink) sink(row);
      result.rows.push_back(std::move(row));
    } catch (const std::exception& e) {
      result.failures.emplace_back(n, e.what());
    }
  }
  std::sort(result.rows.begin(), result.rows.end(),
            [](const SweepRow& a, const SweepRow& b) { return a.n < b.n; });
  return result;
}

}  // namespace braidkc
