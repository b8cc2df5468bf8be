#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "braidkc/rng.hpp"
#include "braidkc/word.hpp"

namespace braidkc {

enum class RuleKind { type1, type2, custom };

// Oriented, length-preserving substitution lhs -> rhs.
struct RewriteRule {
  std::vector<Token> lhs;
  std::vector<Token> rhs;
  RuleKind kind = RuleKind::custom;

  bool operator==(const RewriteRule&) const = default;
};

struct OrderPolicy {
  enum class Kind { canonical, randomized } kind = Kind::canonical;
  uint64_t seed = 0;
};

struct RelationSet {
  uint32_t n = 0;
  std::vector<RewriteRule> rules;
  OrderPolicy order_policy;

  size_t max_lhs_len() const;
};

// Braid relations for n generators, canonical order: the (n-1) rules
// s_i s_{i+1} s_i -> s_{i+1} s_i s_{i+1} for i = 1..n-1, then the
// (n-1)(n-2)/2 commutations s_i s_j -> s_j s_i for i < j, j-i >= 2,
// lexicographic in (i, j). Requires n >= 2.
RelationSet braid_relations(uint32_t n);

// Uniform permutation of the rules; the rule multiset is unchanged.
RelationSet randomize_order(const RelationSet& rs, Rng rng);

// Plain-text rule file: one rule per line, "a b c -> d e f" with integer
// tokens. Loaded rules have kind custom; every rule must be length-
// preserving and within the alphabet.
RelationSet load_relations(const std::string& path, uint32_t n);
RelationSet parse_relations(std::istream& is, uint32_t n);
void save_relations(const std::string& path, const RelationSet& rs);
void write_relations(std::ostream& os, const RelationSet& rs);

}  // namespace braidkc
