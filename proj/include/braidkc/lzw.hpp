#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "braidkc/word.hpp"

namespace braidkc {

enum class WidthMode { variable, fixed };

// LZW output: the emitted codes plus the bit accounting that defines the
// compressed length. Codes are 1-based; 1..initial_alphabet are the single
// tokens, new table entries get codes initial_alphabet+1, +2, ... in
// arrival order.
//
// bit_length sums per-code widths. In variable mode a code emitted while
// the table's next free index is t costs ceil(log2(t)) bits (codes are sent
// 0-based on the wire, and the decoder may legally see the in-flight index
// t itself, so that width always suffices). In fixed mode every code costs
// ceil(log2(final table size)) bits.
struct CodeSequence {
  std::vector<uint32_t> codes;
  uint32_t initial_alphabet = 0;
  WidthMode width_mode = WidthMode::variable;
  uint64_t bit_length = 0;
};

struct TableEntry {
  uint32_t code = 0;
  std::vector<Token> tokens;
};

// Table entries added during a compression run, in code order.
struct StringTable {
  std::vector<TableEntry> entries;
  uint32_t next_code = 0;
};

// Greedy longest-match LZW over tokens 1..alphabet. If `table` is non-null
// it receives every added entry with its materialized string.
CodeSequence lzw_compress(std::span<const Token> tokens, uint32_t alphabet,
                          WidthMode mode = WidthMode::variable, StringTable* table = nullptr);

// Exact inverse of lzw_compress, including the case where a code references
// the entry currently being built. Throws std::runtime_error naming the
// offending code index on malformed input.
std::vector<Token> lzw_decompress(const CodeSequence& cs);

// Recomputes bit_length by replaying table growth over cs.codes.
uint64_t recompute_bit_length(const CodeSequence& cs);

// The compress-then-measure functional: compressed size of w in bits.
uint64_t circ(const Word& w, WidthMode mode = WidthMode::variable);

}  // namespace braidkc
