#include "braidkc/rewrite.hpp"

#include <atomic>
#include <cstdlib>
#include <mutex>
#include <span>
#include <stdexcept>
#include <thread>

#include "braidkc/parallel.hpp"

namespace braidkc {

unsigned thread_budget() {
  if (const char* env = std::getenv("BRAIDKC_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

void parallel_for(size_t count, unsigned threads, const std::function<void(size_t)>& fn) {
  if (threads <= 1 || count <= 1) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  unsigned workers = static_cast<unsigned>(std::min<size_t>(threads, count));
  std::atomic<size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto body = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) pool.emplace_back(body);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

namespace {

// Sweep one rule over a span, in place. Returns replacement count.
uint64_t apply_rule(std::span<Token> s, const RewriteRule& r) {
  const size_t len = r.lhs.size();
  if (s.size() < len) return 0;
  const Token head = r.lhs[0];
  uint64_t count = 0;
  size_t i = 0;
  const size_t last = s.size() - len;
  while (i <= last) {
    if (s[i] == head) {
      bool match = true;
      for (size_t k = 1; k < len; ++k) {
        if (s[i + k] != r.lhs[k]) {
          match = false;
          break;
        }
      }
      if (match) {
        for (size_t k = 0; k < len; ++k) s[i + k] = r.rhs[k];
        i += len;
        ++count;
        continue;
      }
    }
    ++i;
  }
  return count;
}

uint64_t sweep_all_rules(std::span<Token> s, const RelationSet& rs) {
  uint64_t count = 0;
  for (const auto& r : rs.rules) count += apply_rule(s, r);
  return count;
}

// Rules bucketed by first lhs token, preserving priority order within a
// bucket, for the single-scan strategy.
struct RuleIndex {
  std::vector<std::vector<const RewriteRule*>> by_head;  // index 0..n

  explicit RuleIndex(const RelationSet& rs) : by_head(rs.n + 1) {
    for (const auto& r : rs.rules) by_head[r.lhs[0]].push_back(&r);
  }
};

uint64_t single_scan(std::span<Token> s, const RuleIndex& index) {
  uint64_t count = 0;
  size_t i = 0;
  const size_t size = s.size();
  while (i < size) {
    const RewriteRule* fired = nullptr;
    for (const RewriteRule* r : index.by_head[s[i]]) {
      const size_t len = r->lhs.size();
      if (i + len > size) continue;
      bool match = true;
      for (size_t k = 1; k < len; ++k) {
        if (s[i + k] != r->lhs[k]) {
          match = false;
          break;
        }
      }
      if (match) {
        fired = r;
        break;
      }
    }
    if (fired) {
      for (size_t k = 0; k < fired->lhs.size(); ++k) s[i + k] = fired->rhs[k];
      i += fired->lhs.size();
      ++count;
    } else {
      ++i;
    }
  }
  return count;
}

void check_compatible(const Word& w, const RelationSet& rs) {
  if (w.n != rs.n) {
    throw std::invalid_argument("alphabet mismatch: word n=" + std::to_string(w.n) +
                                ", relations n=" + std::to_string(rs.n));
  }
  for (const auto& r : rs.rules) {
    if (r.lhs.size() != r.rhs.size()) {
      throw std::logic_error("relation set contains a non-length-preserving rule");
    }
    if (r.lhs.empty()) throw std::logic_error("relation set contains an empty rule");
  }
}

}  // namespace

std::pair<Word, uint64_t> rewrite_pass(const Word& w, const RelationSet& rs) {
  check_compatible(w, rs);
  Word out = w;
  uint64_t count = sweep_all_rules(std::span<Token>(out.tokens), rs);
  if (out.size() != w.size()) throw std::logic_error("rewrite_pass changed word length");
  return {std::move(out), count};
}

std::pair<Word, uint64_t> single_scan_pass(const Word& w, const RelationSet& rs) {
  check_compatible(w, rs);
  Word out = w;
  RuleIndex index(rs);
  uint64_t count = single_scan(std::span<Token>(out.tokens), index);
  if (out.size() != w.size()) throw std::logic_error("single_scan_pass changed word length");
  return {std::move(out), count};
}

std::pair<Word, ReductionReport> reduce(const Word& w, const RelationSet& rs, uint32_t passes,
                                        size_t chunk_size, PassStrategy strategy,
                                        unsigned threads) {
  check_compatible(w, rs);
  if (passes < 1) throw std::invalid_argument("reduce: passes must be >= 1");
  if (chunk_size > 0 && chunk_size < rs.max_lhs_len()) {
    throw std::invalid_argument("reduce: chunk_size smaller than longest rule lhs");
  }
  auto t0 = std::chrono::steady_clock::now();

  Word out = w;
  const size_t total = out.size();
  ReductionReport report;
  report.chunk_size = chunk_size;

  const size_t step = chunk_size == 0 ? (total == 0 ? 1 : total) : chunk_size;
  const size_t n_chunks = total == 0 ? 0 : (total + step - 1) / step;
  const RuleIndex index(rs);

  for (uint32_t p = 0; p < passes; ++p) {
    std::vector<uint64_t> per_chunk(n_chunks, 0);
    parallel_for(n_chunks, threads, [&](size_t c) {
      size_t begin = c * step;
      size_t sz = std::min(step, total - begin);
      std::span<Token> span(out.tokens.data() + begin, sz);
      per_chunk[c] = strategy == PassStrategy::per_rule_sweep ? sweep_all_rules(span, rs)
                                                              : single_scan(span, index);
    });
    uint64_t applied = 0;
    for (uint64_t a : per_chunk) applied += a;
    report.applications_per_pass.push_back(applied);
  }
  report.passes_run = passes;
  report.wall_time = std::chrono::steady_clock::now() - t0;
  if (out.size() != w.size()) throw std::logic_error("reduce changed word length");
  return {std::move(out), report};
}

std::pair<Word, ReductionReport> reduce_until_fixed(const Word& w, const RelationSet& rs,
                                                    uint32_t max_passes, size_t chunk_size,
                                                    PassStrategy strategy, unsigned threads) {
  if (max_passes < 1) throw std::invalid_argument("reduce_until_fixed: max_passes must be >= 1");
  auto t0 = std::chrono::steady_clock::now();
  Word cur = w;
  ReductionReport report;
  report.chunk_size = chunk_size;
  for (uint32_t p = 0; p < max_passes; ++p) {
    auto [next, single] = reduce(cur, rs, 1, chunk_size, strategy, threads);
    cur = std::move(next);
    report.applications_per_pass.push_back(single.applications_per_pass[0]);
    ++report.passes_run;
    if (single.applications_per_pass[0] == 0) break;
  }
  report.wall_time = std::chrono::steady_clock::now() - t0;
  return {std::move(cur), report};
}

}  // namespace braidkc
