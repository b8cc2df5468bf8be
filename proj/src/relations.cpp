#include "braidkc/relations.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace braidkc {

size_t RelationSet::max_lhs_len() const {
  size_t m = 0;
  for (const auto& r : rules) m = std::max(m, r.lhs.size());
  return m;
}

RelationSet braid_relations(uint32_t n) {
  if (n < 2) throw std::invalid_argument("braid_relations: need n >= 2");
  RelationSet rs;
  rs.n = n;
  rs.rules.reserve((n - 1) + (n - 1) * (n - 2) / 2);
  for (Token i = 1; i < n; ++i) {
    rs.rules.push_back({{i, i + 1, i}, {i + 1, i, i + 1}, RuleKind::type1});
  }
  for (Token i = 1; i + 2 <= n; ++i) {
    for (Token j = i + 2; j <= n; ++j) {
      rs.rules.push_back({{i, j}, {j, i}, RuleKind::type2});
    }
  }
  return rs;
}

RelationSet randomize_order(const RelationSet& rs, Rng rng) {
  RelationSet out = rs;
  // Fisher-Yates
  for (size_t i = out.rules.size(); i > 1; --i) {
    size_t j = rng.uniform_int(0, i - 1);
    std::swap(out.rules[i - 1], out.rules[j]);
  }
  out.order_policy.kind = OrderPolicy::Kind::randomized;
  return out;
}

namespace {

void validate_rule(const RewriteRule& r, uint32_t n, size_t index) {
  if (r.lhs.size() != r.rhs.size()) {
    throw std::runtime_error("rule " + std::to_string(index) +
                             ": not length-preserving (|lhs| != |rhs|)");
  }
  if (r.lhs.empty()) {
    throw std::runtime_error("rule " + std::to_string(index) + ": empty lhs");
  }
  for (Token t : r.lhs) {
    if (t < 1 || t > n)
      throw std::runtime_error("rule " + std::to_string(index) + ": lhs token out of alphabet");
  }
  for (Token t : r.rhs) {
    if (t < 1 || t > n)
      throw std::runtime_error("rule " + std::to_string(index) + ": rhs token out of alphabet");
  }
}

}  // namespace

RelationSet parse_relations(std::istream& is, uint32_t n) {
  RelationSet rs;
  rs.n = n;
  std::string line;
  size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    size_t arrow = line.find("->");
    if (arrow == std::string::npos) {
      throw std::runtime_error("line " + std::to_string(lineno) + ": missing '->'");
    }
    RewriteRule r;
    r.kind = RuleKind::custom;
    std::istringstream left(line.substr(0, arrow));
    std::istringstream right(line.substr(arrow + 2));
    long v;
    while (left >> v) {
      if (v < 1) throw std::runtime_error("line " + std::to_string(lineno) + ": bad token");
      r.lhs.push_back(static_cast<Token>(v));
    }
    if (!left.eof())
      throw std::runtime_error("line " + std::to_string(lineno) + ": unparsable lhs");
    while (right >> v) {
      if (v < 1) throw std::runtime_error("line " + std::to_string(lineno) + ": bad token");
      r.rhs.push_back(static_cast<Token>(v));
    }
    if (!right.eof())
      throw std::runtime_error("line " + std::to_string(lineno) + ": unparsable rhs");
    validate_rule(r, n, rs.rules.size());
    rs.rules.push_back(std::move(r));
  }
  return rs;
}

RelationSet load_relations(const std::string& path, uint32_t n) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open: " + path);
  return parse_relations(is, n);
}

void write_relations(std::ostream& os, const RelationSet& rs) {
  for (const auto& r : rs.rules) {
    for (size_t i = 0; i < r.lhs.size(); ++i) os << (i ? " " : "") << r.lhs[i];
    os << " -> ";
    for (size_t i = 0; i < r.rhs.size(); ++i) os << (i ? " " : "") << r.rhs[i];
    os << "\n";
  }
}

void save_relations(const std::string& path, const RelationSet& rs) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  write_relations(os, rs);
  if (!os) throw std::runtime_error("write failed: " + path);
}

}  // namespace braidkc
