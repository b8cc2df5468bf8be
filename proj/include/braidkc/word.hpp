#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "braidkc/rng.hpp"

namespace braidkc {

using Token = uint32_t;

// A positive word over generators 1..n. Tokens are 1-based generator
// indices; there is no representation for inverses.
struct Word {
  std::vector<Token> tokens;
  uint32_t n = 0;  // alphabet size (number of generators)

  size_t size() const { return tokens.size(); }
  bool operator==(const Word&) const = default;
};

// Uniform i.i.d. word of exactly `len` tokens from {1..n}.
Word random_word(uint32_t n, size_t len, Rng rng);

// `len` copies of generator 1.
Word const_word(uint32_t n, size_t len);

// Throws std::invalid_argument when a token falls outside 1..n.
void validate_word(const Word& w);

// Text format: header line "n=<int> len=<int>", then whitespace-separated
// token integers.
void write_word(std::ostream& os, const Word& w);
Word read_word(std::istream& is);
void save_word(const std::string& path, const Word& w);
Word load_word(const std::string& path);

}  // namespace braidkc
