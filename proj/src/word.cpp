#include "braidkc/word.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace braidkc {

Word random_word(uint32_t n, size_t len, Rng rng) {
  if (n == 0) throw std::invalid_argument("random_word: alphabet size must be >= 1");
  Word w;
  w.n = n;
  w.tokens.resize(len);
  for (size_t i = 0; i < len; ++i) {
    w.tokens[i] = static_cast<Token>(rng.uniform_int(1, n));
  }
  return w;
}

Word const_word(uint32_t n, size_t len) {
  if (n == 0) throw std::invalid_argument("const_word: alphabet size must be >= 1");
  Word w;
  w.n = n;
  w.tokens.assign(len, 1);
  return w;
}

void validate_word(const Word& w) {
  for (size_t i = 0; i < w.tokens.size(); ++i) {
    if (w.tokens[i] < 1 || w.tokens[i] > w.n) {
      throw std::invalid_argument("word token out of alphabet at position " + std::to_string(i));
    }
  }
}

void write_word(std::ostream& os, const Word& w) {
  os << "n=" << w.n << " len=" << w.tokens.size() << "\n";
  for (size_t i = 0; i < w.tokens.size(); ++i) {
    os << w.tokens[i];
    os << ((i + 1) % 40 == 0 ? '\n' : ' ');
  }
  if (!w.tokens.empty() && w.tokens.size() % 40 != 0) os << '\n';
}

Word read_word(std::istream& is) {
  std::string header;
  if (!std::getline(is, header)) throw std::runtime_error("word file: missing header line");
  uint32_t n = 0;
  size_t len = 0;
  if (std::sscanf(header.c_str(), "n=%u len=%zu", &n, &len) != 2) {
    throw std::runtime_error("word file: malformed header '" + header + "'");
  }
  Word w;
  w.n = n;
  w.tokens.reserve(len);
  Token t;
  while (w.tokens.size() < len && is >> t) w.tokens.push_back(t);
  if (w.tokens.size() != len) {
    throw std::runtime_error("word file: expected " + std::to_string(len) + " tokens, got " +
                             std::to_string(w.tokens.size()));
  }
  validate_word(w);
  return w;
}

void save_word(const std::string& path, const Word& w) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  write_word(os, w);
  if (!os) throw std::runtime_error("write failed: " + path);
}

Word load_word(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open: " + path);
  return read_word(is);
}

}  // namespace braidkc
