#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "braidkc/relations.hpp"
#include "braidkc/rewrite.hpp"
#include "braidkc/word.hpp"

namespace braidkc {

// Maximal run of non-increasing generator indices (repetition allowed)
// anchored at an occurrence of the start token; optionally carries the
// index that broke the run as a trailing terminator.
struct DecreasingString {
  std::vector<Token> tokens;
  size_t start_pos = 0;

  size_t length() const { return tokens.size(); }
  bool operator==(const DecreasingString&) const = default;
};

struct ExtractOptions {
  size_t count = 500;             // cap on extracted strings
  size_t region_begin = 0;        // [begin, end) of scan-start positions
  size_t region_end = 0;          // 0 = word end
  bool include_terminator = true; // append the run-breaking token
  Token start_token = 0;          // 0 = the maximal generator index n
};

// Scans the region for occurrences of the start token; each anchors one
// maximal run, and the scan resumes at the token that halted the run (runs
// never nest). Runs may extend past the region end but not the word end.
// Sequential-first-`count` collection.
std::vector<DecreasingString> extract_decreasing(const Word& w, const ExtractOptions& opt);

// Overlapping occurrences of pattern in w, counted at distinct start positions.
uint64_t count_occurrences(const Word& w, std::span<const Token> pattern);

// Frequency-of-occurrence summary over the distinct extracted strings of
// length >= 2 (length-1 strings are tallied separately, matching how the
// source experiment dropped them from its plots). The `repeated_*` block
// restricts to strings occurring at least twice.
struct FrequencyStats {
  bool empty = true;

  uint64_t max = 0;
  uint64_t min = 0;
  double mean = 0;
  double stddev = 0;
  size_t distinct_strings = 0;

  uint64_t repeated_max = 0;
  uint64_t repeated_min = 0;
  double repeated_mean = 0;
  double repeated_stddev = 0;
  size_t repeated_distinct = 0;

  std::map<size_t, size_t> histogram;  // extracted-string length -> count, length 1 excluded
  size_t length_one_count = 0;
};

FrequencyStats frequency_stats(const std::vector<DecreasingString>& strings, const Word& w);

// Reduction checkpoints: stats of the word after exactly `passes` passes,
// for each ascending checkpoint (0 = unreduced). The word and the rule
// order stay fixed across checkpoints.
std::vector<std::pair<uint32_t, FrequencyStats>> pass_profile(
    const Word& w, const RelationSet& rs, const std::vector<uint32_t>& pass_checkpoints,
    const ExtractOptions& opt, size_t chunk_size = 0,
    PassStrategy strategy = PassStrategy::single_scan, unsigned threads = 1);

}  // namespace braidkc
