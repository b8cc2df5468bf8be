#include "braidkc/lzw.hpp"

#include <bit>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace braidkc {

namespace {

// ceil(log2(x)) for x >= 1
inline uint32_t ceil_log2(uint64_t x) {
  return x <= 1 ? 0 : static_cast<uint32_t>(std::bit_width(x - 1));
}

inline uint64_t pair_key(uint32_t prefix_code, Token t) {
  return (static_cast<uint64_t>(prefix_code) << 32) | t;
}

}  // namespace

CodeSequence lzw_compress(std::span<const Token> tokens, uint32_t alphabet, WidthMode mode,
                          StringTable* table) {
  if (alphabet < 1) throw std::invalid_argument("lzw_compress: alphabet must be >= 1");

  CodeSequence cs;
  cs.initial_alphabet = alphabet;
  cs.width_mode = mode;

  std::unordered_map<uint64_t, uint32_t> dict;
  dict.reserve(tokens.size() / 2 + 16);
  // (prefix code, appended token) per added entry; lets the trace
  // materialize strings without storing them during the hot loop.
  std::vector<std::pair<uint32_t, Token>> added;
  if (table) added.reserve(1024);

  uint32_t next_code = alphabet + 1;
  uint64_t var_bits = 0;
  uint32_t cur = 0;  // code of current string; 0 = empty

  auto emit = [&](uint32_t code) {
    cs.codes.push_back(code);
    var_bits += ceil_log2(next_code);
  };

  for (Token t : tokens) {
    if (t < 1 || t > alphabet) throw std::invalid_argument("lzw_compress: token out of alphabet");
    if (cur == 0) {
      cur = t;
      continue;
    }
    auto it = dict.find(pair_key(cur, t));
    if (it != dict.end()) {
      cur = it->second;
    } else {
      emit(cur);
      dict.emplace(pair_key(cur, t), next_code);
      if (table) added.emplace_back(cur, t);
      ++next_code;
      cur = t;
    }
  }
  if (cur != 0) emit(cur);

  if (mode == WidthMode::variable) {
    cs.bit_length = var_bits;
  } else {
    uint32_t table_size = next_code - 1;
    uint32_t w = ceil_log2(table_size);
    if (w == 0) w = 1;
    cs.bit_length = static_cast<uint64_t>(cs.codes.size()) * w;
  }

  if (table) {
    table->next_code = next_code;
    table->entries.clear();
    table->entries.reserve(added.size());
    // string(code) = string(prefix) + token; entries arrive in code order,
    // so prefixes above the alphabet are already materialized.
    for (size_t i = 0; i < added.size(); ++i) {
      TableEntry e;
      e.code = alphabet + 1 + static_cast<uint32_t>(i);
      auto [prefix, t] = added[i];
      if (prefix <= alphabet) {
        e.tokens = {prefix, t};
      } else {
        e.tokens = table->entries[prefix - alphabet - 1].tokens;
        e.tokens.push_back(t);
      }
      table->entries.push_back(std::move(e));
    }
  }
  return cs;
}

std::vector<Token> lzw_decompress(const CodeSequence& cs) {
  std::vector<Token> out;
  if (cs.codes.empty()) return out;
  const uint32_t alphabet = cs.initial_alphabet;
  if (alphabet < 1) throw std::runtime_error("lzw_decompress: alphabet must be >= 1");

  struct Entry {
    uint32_t prefix;
    Token token;
    Token first;
    size_t length;
  };
  std::vector<Entry> entries;  // entry i has code alphabet+1+i
  entries.reserve(cs.codes.size());

  auto entry_length = [&](uint32_t code) -> size_t {
    return code <= alphabet ? 1 : entries[code - alphabet - 1].length;
  };
  auto first_token = [&](uint32_t code) -> Token {
    return code <= alphabet ? code : entries[code - alphabet - 1].first;
  };
  // Writes string(code) into out[at .. at+len), walking the prefix chain
  // from the tail.
  auto write_string = [&](uint32_t code, size_t at, size_t len) {
    size_t pos = at + len;
    uint32_t c = code;
    while (c > alphabet) {
      const Entry& e = entries[c - alphabet - 1];
      out[--pos] = e.token;
      c = e.prefix;
    }
    out[--pos] = c;
  };

  uint32_t next_code = alphabet + 1;
  uint32_t prev = cs.codes[0];
  if (prev < 1 || prev > alphabet) {
    throw std::runtime_error("lzw_decompress: first code (index 0) is not a root code");
  }
  out.push_back(prev);

  for (size_t i = 1; i < cs.codes.size(); ++i) {
    uint32_t code = cs.codes[i];
    if (code < 1 || code > next_code) {
      throw std::runtime_error("lzw_decompress: bad code at index " + std::to_string(i));
    }
    size_t len;
    Token first;
    if (code == next_code) {
      // KwKwK: the referenced entry is the one being built.
      len = entry_length(prev) + 1;
      first = first_token(prev);
    } else {
      len = entry_length(code);
      first = first_token(code);
    }
    entries.push_back({prev, first, first_token(prev), entry_length(prev) + 1});
    ++next_code;

    size_t at = out.size();
    out.resize(at + len);
    // In the KwKwK case the just-added entry is exactly string(prev)+first(prev),
    // so walking it yields the right string.
    write_string(code, at, len);
    prev = code;
  }
  return out;
}

uint64_t recompute_bit_length(const CodeSequence& cs) {
  uint32_t next_code = cs.initial_alphabet + 1;
  uint64_t bits = 0;
  if (cs.width_mode == WidthMode::variable) {
    for (size_t i = 0; i < cs.codes.size(); ++i) {
      bits += ceil_log2(next_code);
      if (i + 1 < cs.codes.size()) ++next_code;  // final flush adds no entry
    }
  } else {
    uint32_t table_size = cs.initial_alphabet +
                          static_cast<uint32_t>(cs.codes.empty() ? 0 : cs.codes.size() - 1);
    uint32_t w = ceil_log2(table_size);
    if (w == 0) w = 1;
    bits = static_cast<uint64_t>(cs.codes.size()) * w;
  }
  return bits;
}

uint64_t circ(const Word& w, WidthMode mode) {
  if (w.tokens.empty()) return 0;
  return lzw_compress(std::span<const Token>(w.tokens), w.n, mode).bit_length;
}

}  // namespace braidkc
