#include "braidkc/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "braidkc/rewrite.hpp"

namespace braidkc {

std::vector<DecreasingString> extract_decreasing(const Word& w, const ExtractOptions& opt) {
  if (opt.count < 1) throw std::invalid_argument("extract_decreasing: count must be >= 1");
  const size_t len = w.size();
  size_t begin = opt.region_begin;
  size_t end = opt.region_end == 0 ? len : opt.region_end;
  if (begin > len || end > len || begin > end) {
    throw std::invalid_argument("extract_decreasing: region out of word bounds");
  }
  const Token start = opt.start_token == 0 ? w.n : opt.start_token;

  std::vector<DecreasingString> out;
  size_t i = begin;
  while (i < end && out.size() < opt.count) {
    if (w.tokens[i] != start) {
      ++i;
      continue;
    }
    DecreasingString s;
    s.start_pos = i;
    size_t j = i;
    s.tokens.push_back(w.tokens[j]);
    while (j + 1 < len && w.tokens[j + 1] <= w.tokens[j]) {
      ++j;
      s.tokens.push_back(w.tokens[j]);
    }
    if (opt.include_terminator && j + 1 < len) {
      s.tokens.push_back(w.tokens[j + 1]);  // the index that halted the run
    }
    out.push_back(std::move(s));
    // runs do not nest: resume at the token that halted this run
    i = j + 1;
  }
  return out;
}

uint64_t count_occurrences(const Word& w, std::span<const Token> pattern) {
  if (pattern.empty() || pattern.size() > w.size()) return 0;
  uint64_t count = 0;
  const size_t last = w.size() - pattern.size();
  for (size_t i = 0; i <= last; ++i) {
    bool match = true;
    for (size_t k = 0; k < pattern.size(); ++k) {
      if (w.tokens[i + k] != pattern[k]) {
        match = false;
        break;
      }
    }
    if (match) ++count;
  }
  return count;
}

namespace {

struct FourNum {
  uint64_t max = 0, min = 0;
  double mean = 0, stddev = 0;
};

FourNum summarize(const std::vector<uint64_t>& counts) {
  FourNum f;
  if (counts.empty()) return f;
  f.max = *std::max_element(counts.begin(), counts.end());
  f.min = *std::min_element(counts.begin(), counts.end());
  double sum = 0;
  for (uint64_t c : counts) sum += static_cast<double>(c);
  f.mean = sum / static_cast<double>(counts.size());
  if (counts.size() > 1) {
    double ss = 0;
    for (uint64_t c : counts) {
      double d = static_cast<double>(c) - f.mean;
      ss += d * d;
    }
    f.stddev = std::sqrt(ss / static_cast<double>(counts.size() - 1));
  }
  return f;
}

}  // namespace

FrequencyStats frequency_stats(const std::vector<DecreasingString>& strings, const Word& w) {
  FrequencyStats fs;
  if (strings.empty()) return fs;  // empty-stats marker
  fs.empty = false;

  std::vector<std::vector<Token>> distinct;
  for (const auto& s : strings) {
    if (s.length() == 1) {
      ++fs.length_one_count;
      continue;
    }
    ++fs.histogram[s.length()];
    distinct.push_back(s.tokens);
  }
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  std::vector<uint64_t> counts, repeated;
  counts.reserve(distinct.size());
  for (const auto& pat : distinct) {
    uint64_t c = count_occurrences(w, pat);
    counts.push_back(c);
    if (c >= 2) repeated.push_back(c);
  }
  FourNum all = summarize(counts);
  fs.max = all.max;
  fs.min = all.min;
  fs.mean = all.mean;
  fs.stddev = all.stddev;
  fs.distinct_strings = distinct.size();

  FourNum rep = summarize(repeated);
  fs.repeated_max = rep.max;
  fs.repeated_min = rep.min;
  fs.repeated_mean = rep.mean;
  fs.repeated_stddev = rep.stddev;
  fs.repeated_distinct = repeated.size();
  return fs;
}

std::vector<std::pair<uint32_t, FrequencyStats>> pass_profile(
    const Word& w, const RelationSet& rs, const std::vector<uint32_t>& pass_checkpoints,
    const ExtractOptions& opt, size_t chunk_size, PassStrategy strategy, unsigned threads) {
  for (size_t i = 1; i < pass_checkpoints.size(); ++i) {
    if (pass_checkpoints[i] <= pass_checkpoints[i - 1]) {
      throw std::invalid_argument("pass_profile: checkpoints must be strictly ascending");
    }
  }
  std::vector<std::pair<uint32_t, FrequencyStats>> out;
  Word cur = w;
  uint32_t done = 0;
  for (uint32_t cp : pass_checkpoints) {
    if (cp > done) {
      auto [next, report] = reduce(cur, rs, cp - done, chunk_size, strategy, threads);
      cur = std::move(next);
      done = cp;
    }
    auto strings = extract_decreasing(cur, opt);
    out.emplace_back(cp, frequency_stats(strings, cur));
  }
  return out;
}

}  // namespace braidkc
