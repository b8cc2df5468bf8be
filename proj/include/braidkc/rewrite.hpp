#pragma once

#include <chrono>
#include <cstdint>
#include <utility>
#include <vector>

#include "braidkc/relations.hpp"
#include "braidkc/word.hpp"

namespace braidkc {

inline constexpr size_t kDefaultChunk = 20000;
inline constexpr uint32_t kDefaultMaxPasses = 1000000;

struct ReductionReport {
  uint32_t passes_run = 0;
  std::vector<uint64_t> applications_per_pass;
  size_t chunk_size = 0;
  std::chrono::duration<double> wall_time{0};

  bool reached_fixed_point() const {
    return !applications_per_pass.empty() && applications_per_pass.back() == 0;
  }
};

// Two within-pass strategies. per_rule_sweep: for each rule in order, sweep
// the whole word left to right replacing every non-overlapping lhs
// occurrence, resuming after the replacement end; later rules see earlier
// rules' output. single_scan: one left-to-right scan; at each position the
// first rule (in order) whose lhs matches fires, and the scan resumes after
// the replacement. single_scan does far less work per pass and is the
// strategy that reproduces the reference band structure; it is the
// estimator default.
enum class PassStrategy { per_rule_sweep, single_scan };

// One per_rule_sweep pass. Length-preserving.
std::pair<Word, uint64_t> rewrite_pass(const Word& w, const RelationSet& rs);

// One single_scan pass. Length-preserving.
std::pair<Word, uint64_t> single_scan_pass(const Word& w, const RelationSet& rs);

// m passes with chunking: the word is split into consecutive chunks of
// chunk_size (0 = no chunking, last chunk shorter); each pass applies the
// strategy within each chunk, never across boundaries. Chunks are
// independent, so `threads` > 1 gives bit-identical results.
std::pair<Word, ReductionReport> reduce(const Word& w, const RelationSet& rs, uint32_t passes,
                                        size_t chunk_size,
                                        PassStrategy strategy = PassStrategy::per_rule_sweep,
                                        unsigned threads = 1);

// Single passes until a pass fires no rule or max_passes is hit.
std::pair<Word, ReductionReport> reduce_until_fixed(const Word& w, const RelationSet& rs,
                                                    uint32_t max_passes, size_t chunk_size,
                                                    PassStrategy strategy = PassStrategy::per_rule_sweep,
                                                    unsigned threads = 1);

}  // namespace braidkc
