#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>

namespace braidkc {

// Buffer abstraction behind the band predictions: a dictionary of h(n)
// repeated strings, each log2(n)*p(n) bits wide, traded against the word
// body. p and h are supplied numerically; braid_buffer_model gives the
// braid-specific preset p = c, h = n^{c(1-delta)}.
struct BufferModel {
  uint32_t n = 0;
  double p = 0;  // buffer width polynomial value p(n)
  double h = 0;  // buffer length value h(n)
  double word_len = 0;
};

// "much less than" operationalized as strict < with a margin factor.
inline constexpr double kFeasibilityMargin = 10.0;

inline BufferModel braid_buffer_model(uint32_t n, double c, double delta, double word_len) {
  if (n < 2) throw std::invalid_argument("braid_buffer_model: need n >= 2");
  if (delta <= 0 || delta >= 1) throw std::invalid_argument("braid_buffer_model: delta in (0,1)");
  return {n, c, std::pow(static_cast<double>(n), c * (1.0 - delta)), word_len};
}

// The buffer must be small against the word and the per-string codes must
// actually shorten the body: log2(n)*p*h << word_len*log2(n) and
// 0 < log2(h)/(log2(n)*p) < 1.
inline bool compression_feasible(const BufferModel& bm, double margin = kFeasibilityMargin) {
  if (bm.n < 2 || bm.p <= 0 || bm.h < 1) {
    throw std::invalid_argument("compression_feasible: need n >= 2, p > 0, h >= 1");
  }
  double log2n = std::log2(static_cast<double>(bm.n));
  bool buffer_small = margin * log2n * bm.p * bm.h < bm.word_len * log2n;
  double ratio = std::log2(bm.h) / (log2n * bm.p);
  return buffer_small && ratio > 0 && ratio < 1;
}

// Admissible buffer length window h in [n, n^p).
inline bool h_in_admissible_range(const BufferModel& bm) {
  return bm.h >= static_cast<double>(bm.n) &&
         bm.h < std::pow(static_cast<double>(bm.n), bm.p);
}

// Predicted quotient band 1 - log2(h)/(log2(n)*p); equals delta for the
// braid preset h = n^{c(1-delta)}, p = c.
inline double predicted_quotient(const BufferModel& bm) {
  double log2n = std::log2(static_cast<double>(bm.n));
  return 1.0 - std::log2(bm.h) / (log2n * bm.p);
}

// Upper envelope c'/n of the braid bands.
inline double braid_band_envelope(uint32_t n, double c_prime) {
  if (n < 3) throw std::invalid_argument("braid_band_envelope: need n >= 3");
  return c_prime / static_cast<double>(n);
}

// (complexity of a random word, complexity of the constant word):
// (log2(n)*|w|, log2(n)*log2(|w|)).
inline std::pair<double, double> theoretical_complexities(uint32_t n, double word_len) {
  if (n < 2 || word_len < 1) {
    throw std::invalid_argument("theoretical_complexities: need n >= 2, word_len >= 1");
  }
  double log2n = std::log2(static_cast<double>(n));
  return {log2n * word_len, log2n * std::log2(word_len)};
}

// Order-of-magnitude band 1/q(n) for a general length-preserving relation
// system.
inline double general_band([[maybe_unused]] uint32_t n, double q_of_n) {
  if (q_of_n <= 0) throw std::invalid_argument("general_band: q(n) must be positive");
  return 1.0 / q_of_n;
}

}  // namespace braidkc
