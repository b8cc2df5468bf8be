#pragma once

// Independent reference implementations used only by tests. These stay
// deliberately naive (copy-based, position-by-position) so they share no
// code path with the library's in-place engines.

#include <algorithm>
#include <vector>

#include "braidkc/analysis.hpp"
#include "braidkc/relations.hpp"
#include "braidkc/word.hpp"

namespace oracle {

using braidkc::RelationSet;
using braidkc::RewriteRule;
using braidkc::Token;
using braidkc::Word;

// Replace-all for one rule, building the output by copy.
inline std::vector<Token> apply_rule(const std::vector<Token>& w, const RewriteRule& r,
                                     uint64_t* fired = nullptr) {
  std::vector<Token> out;
  out.reserve(w.size());
  size_t i = 0;
  while (i < w.size()) {
    if (i + r.lhs.size() <= w.size() &&
        std::equal(r.lhs.begin(), r.lhs.end(), w.begin() + static_cast<long>(i))) {
      out.insert(out.end(), r.rhs.begin(), r.rhs.end());
      i += r.lhs.size();
      if (fired) ++*fired;
    } else {
      out.push_back(w[i]);
      ++i;
    }
  }
  return out;
}

inline std::pair<Word, uint64_t> rewrite_pass(const Word& w, const RelationSet& rs) {
  uint64_t fired = 0;
  std::vector<Token> cur = w.tokens;
  for (const auto& r : rs.rules) cur = apply_rule(cur, r, &fired);
  return {Word{cur, w.n}, fired};
}

inline std::pair<Word, uint64_t> single_scan_pass(const Word& w, const RelationSet& rs) {
  uint64_t fired = 0;
  std::vector<Token> out;
  out.reserve(w.size());
  size_t i = 0;
  while (i < w.tokens.size()) {
    const RewriteRule* hit = nullptr;
    for (const auto& r : rs.rules) {
      if (i + r.lhs.size() <= w.tokens.size() &&
          std::equal(r.lhs.begin(), r.lhs.end(), w.tokens.begin() + static_cast<long>(i))) {
        hit = &r;
        break;
      }
    }
    if (hit) {
      out.insert(out.end(), hit->rhs.begin(), hit->rhs.end());
      i += hit->lhs.size();
      ++fired;
    } else {
      out.push_back(w.tokens[i]);
      ++i;
    }
  }
  return {Word{out, w.n}, fired};
}

// Decreasing-string extraction, recomputing each run from scratch. Runs do
// not nest: after a run the scan resumes at the token that halted it.
inline std::vector<braidkc::DecreasingString> extract_decreasing(
    const Word& w, const braidkc::ExtractOptions& opt) {
  std::vector<braidkc::DecreasingString> out;
  const Token start = opt.start_token == 0 ? w.n : opt.start_token;
  size_t end = opt.region_end == 0 ? w.size() : opt.region_end;
  size_t p = opt.region_begin;
  while (p < end && out.size() < opt.count) {
    if (w.tokens[p] != start) {
      ++p;
      continue;
    }
    size_t run = 1;
    while (p + run < w.size() && w.tokens[p + run] <= w.tokens[p + run - 1]) ++run;
    braidkc::DecreasingString s;
    s.start_pos = p;
    s.tokens.assign(w.tokens.begin() + static_cast<long>(p),
                    w.tokens.begin() + static_cast<long>(p + run));
    if (opt.include_terminator && p + run < w.size()) s.tokens.push_back(w.tokens[p + run]);
    out.push_back(std::move(s));
    p += run;
  }
  return out;
}

inline uint64_t count_occurrences(const Word& w, const std::vector<Token>& pattern) {
  if (pattern.empty()) return 0;
  uint64_t count = 0;
  auto it = w.tokens.begin();
  while (true) {
    it = std::search(it, w.tokens.end(), pattern.begin(), pattern.end());
    if (it == w.tokens.end()) break;
    ++count;
    ++it;  // overlapping occurrences allowed
  }
  return count;
}

}  // namespace oracle
