#include <doctest.h>

#include <cmath>

#include "braidkc/theory.hpp"

using namespace braidkc;

TEST_CASE("compression_feasible boundary cases") {
  // log2(h)/(log2(n) p) = 3/4 < 1 and the buffer is tiny against the word
  CHECK(compression_feasible({10, 4.0, 1e3, 1e6}));

  // h = n^p puts the ratio at exactly 1
  CHECK_FALSE(compression_feasible({10, 4.0, 1e4, 1e6}));

  // h > n^p
  CHECK_FALSE(compression_feasible({10, 4.0, 1e5, 1e6}));

  // buffer as large as the word itself
  CHECK_FALSE(compression_feasible({10, 4.0, 1e3, 1e3}));

  CHECK_THROWS_AS(compression_feasible({1, 1.0, 1.0, 10.0}), std::invalid_argument);
}

TEST_CASE("predicted_quotient instances") {
  // h = n, p = 1: ratio is exactly 1
  CHECK(predicted_quotient({10, 1.0, 10.0, 0}) == doctest::Approx(0.0));

  // braid preset n=10, c=3, delta=0.1
  BufferModel bm = braid_buffer_model(10, 3.0, 0.1, 1e6);
  CHECK(predicted_quotient(bm) == doctest::Approx(0.1).epsilon(1e-12));
}

TEST_CASE("braid preset recovers delta to machine precision on a grid") {
  for (uint32_t n = 2; n <= 100; n += 7) {
    for (double c = 1.0; c <= 10.0; c += 1.5) {
      for (double delta = 0.05; delta < 1.0; delta += 0.1) {
        BufferModel bm = braid_buffer_model(n, c, delta, 1e9);
        CHECK(predicted_quotient(bm) == doctest::Approx(delta).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("log2(n)*p equals log2(n^p) on the same grid") {
  for (uint32_t n = 2; n <= 100; n += 7) {
    for (double p = 1.0; p <= 10.0; p += 1.5) {
      double lhs = std::log2(static_cast<double>(n)) * p;
      double rhs = std::log2(std::pow(static_cast<double>(n), p));
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
  }
}

TEST_CASE("predicted_quotient lies in (0,1) exactly on the feasible ratio region") {
  // margin 1 and a huge word isolate the ratio condition
  for (uint32_t n : {2u, 3u, 5u, 10u, 40u, 100u}) {
    for (double p : {0.5, 1.0, 2.0, 4.0, 8.0}) {
      for (double h : {1.5, 2.0, 10.0, 1e3, 1e6, 1e9}) {
        BufferModel bm{n, p, h, 1e30};
        bool feasible = compression_feasible(bm, 1.0);
        double q = predicted_quotient(bm);
        CHECK((q > 0 && q < 1) == feasible);
      }
    }
  }
}

TEST_CASE("h admissible range is [n, n^p)") {
  CHECK(h_in_admissible_range({10, 4.0, 10.0, 0}));
  CHECK(h_in_admissible_range({10, 4.0, 9999.0, 0}));
  CHECK_FALSE(h_in_admissible_range({10, 4.0, 9.0, 0}));
  CHECK_FALSE(h_in_admissible_range({10, 4.0, 10000.0, 0}));
}

TEST_CASE("braid band envelope") {
  CHECK(braid_band_envelope(10, 0.572318) == doctest::Approx(0.0572318));
  double prev = 1e9;
  for (uint32_t n = 3; n <= 100; ++n) {
    double e = braid_band_envelope(n, 0.572318);
    CHECK(e < prev);
    prev = e;
  }
  CHECK_THROWS_AS(braid_band_envelope(2, 1.0), std::invalid_argument);
}

TEST_CASE("theoretical complexities") {
  auto [c_free, c_const] = theoretical_complexities(2, 1024.0);
  CHECK(c_free == doctest::Approx(1024.0));
  CHECK(c_const == doctest::Approx(10.0));

  auto [f10, k10] = theoretical_complexities(10, 1e6);
  CHECK(f10 == doctest::Approx(3.3219280948873626e6).epsilon(1e-12));
  CHECK(k10 == doctest::Approx(66.21123760561188).epsilon(1e-9));

  // const/free ratio goes to zero with growing word length
  double prev = 1.0;
  for (double len : {1e3, 1e5, 1e7, 1e9}) {
    auto [cf, cc] = theoretical_complexities(10, len);
    double ratio = cc / cf;
    CHECK(ratio < prev);
    prev = ratio;
  }
  CHECK(prev < 1e-7);
}

TEST_CASE("general band") {
  for (uint32_t n = 2; n <= 50; ++n) {
    CHECK(general_band(n, static_cast<double>(n)) == doctest::Approx(1.0 / n));
    CHECK(general_band(n, static_cast<double>(n) * n) <
          general_band(n, static_cast<double>(n)));
  }
  CHECK_THROWS_AS(general_band(5, 0.0), std::invalid_argument);
}
