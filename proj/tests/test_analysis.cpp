#include <doctest.h>

#include "braidkc/analysis.hpp"
#include "oracles.hpp"

using namespace braidkc;

namespace {

const Word kExampleWord{{2, 3, 1, 1, 2, 3, 3, 1, 2, 3}, 3};

std::vector<std::vector<Token>> token_lists(const std::vector<DecreasingString>& ss) {
  std::vector<std::vector<Token>> out;
  for (const auto& s : ss) out.push_back(s.tokens);
  return out;
}

}  // namespace

TEST_CASE("the worked example yields both documented strings") {
  ExtractOptions with_term;
  with_term.count = 10;
  auto strings = extract_decreasing(kExampleWord, with_term);
  auto lists = token_lists(strings);
  // runs anchored at positions 1, 5 (consuming the 3 at 6) and 9
  CHECK(lists == std::vector<std::vector<Token>>{{3, 1, 1, 2}, {3, 3, 1, 2}, {3}});
  CHECK(strings[0].start_pos == 1);
  CHECK(strings[1].start_pos == 5);

  ExtractOptions no_term = with_term;
  no_term.include_terminator = false;
  auto bare = token_lists(extract_decreasing(kExampleWord, no_term));
  CHECK(bare == std::vector<std::vector<Token>>{{3, 1, 1}, {3, 3, 1}, {3}});
}

TEST_CASE("constant start-token word is one run spanning the region") {
  Word w{{3, 3, 3, 3, 3}, 3};
  ExtractOptions opt;
  opt.count = 10;
  auto strings = extract_decreasing(w, opt);
  REQUIRE(strings.size() == 1);
  CHECK(strings[0].tokens == std::vector<Token>{3, 3, 3, 3, 3});
}

TEST_CASE("extraction options") {
  SUBCASE("count caps the number of strings") {
    Word w = random_word(4, 500, Rng(1, 0));
    ExtractOptions opt;
    opt.count = 3;
    CHECK(extract_decreasing(w, opt).size() <= 3);
  }
  SUBCASE("region restricts anchor positions but runs may pass its end") {
    Word w{{2, 3, 1, 3, 2, 1, 1, 2}, 3};
    ExtractOptions opt;
    opt.count = 10;
    opt.region_begin = 2;
    opt.region_end = 4;
    auto strings = extract_decreasing(w, opt);
    REQUIRE(strings.size() == 1);
    CHECK(strings[0].start_pos == 3);
    CHECK(strings[0].tokens == std::vector<Token>{3, 2, 1, 1, 2});  // run + terminator
  }
  SUBCASE("custom start token") {
    Word w{{2, 1, 1, 3, 2}, 3};
    ExtractOptions opt;
    opt.count = 10;
    opt.start_token = 2;
    opt.include_terminator = false;
    auto lists = token_lists(extract_decreasing(w, opt));
    CHECK(lists == std::vector<std::vector<Token>>{{2, 1, 1}, {2}});
  }
  SUBCASE("empty region yields nothing") {
    Word w{{3, 2, 1}, 3};
    ExtractOptions opt;
    opt.region_begin = 1;
    opt.region_end = 1;
    CHECK(extract_decreasing(w, opt).empty());
  }
  SUBCASE("region beyond bounds rejected") {
    Word w{{3, 2, 1}, 3};
    ExtractOptions opt;
    opt.region_end = 9;
    CHECK_THROWS_AS(extract_decreasing(w, opt), std::invalid_argument);
  }
}

TEST_CASE("every extracted string is non-increasing apart from the terminator") {
  Rng rng(17, 0);
  for (int trial = 0; trial < 100; ++trial) {
    uint32_t n = static_cast<uint32_t>(rng.uniform_int(2, 15));
    Word w = random_word(n, rng.uniform_int(1, 400), rng.split(trial));
    for (bool term : {false, true}) {
      ExtractOptions opt;
      opt.count = 1000;
      opt.include_terminator = term;
      for (const auto& s : extract_decreasing(w, opt)) {
        size_t run_len = term && s.start_pos + s.length() <= w.size() &&
                                 s.length() >= 2 &&
                                 s.tokens[s.length() - 1] > s.tokens[s.length() - 2]
                             ? s.length() - 1
                             : s.length();
        CHECK(s.tokens[0] == w.n);
        for (size_t i = 1; i < run_len; ++i) REQUIRE(s.tokens[i] <= s.tokens[i - 1]);
      }
    }
  }
}

TEST_CASE("extraction equals the reference extractor on random words") {
  Rng rng(99, 0);
  for (int trial = 0; trial < 300; ++trial) {
    uint32_t n = static_cast<uint32_t>(rng.uniform_int(2, 15));
    Word w = random_word(n, rng.uniform_int(0, 200), rng.split(trial));
    ExtractOptions opt;
    opt.count = 500;
    opt.include_terminator = trial % 2 == 0;
    if (w.size() > 10) {
      opt.region_begin = w.size() / 3;
      opt.region_end = 2 * w.size() / 3;
    }
    auto got = extract_decreasing(w, opt);
    auto want = oracle::extract_decreasing(w, opt);
    REQUIRE(got == want);
  }
}

TEST_CASE("count_occurrences counts overlapping matches") {
  Word w{{1, 1, 1, 1}, 2};
  CHECK(count_occurrences(w, std::vector<Token>{1, 1}) == 3);
  CHECK(count_occurrences(w, std::vector<Token>{2}) == 0);
  CHECK(count_occurrences(w, std::vector<Token>{}) == 0);

  Rng rng(5, 0);
  for (int trial = 0; trial < 200; ++trial) {
    Word word = random_word(3, rng.uniform_int(0, 500), rng.split(trial));
    size_t plen = rng.uniform_int(1, 4);
    std::vector<Token> pat;
    for (size_t i = 0; i < plen; ++i) pat.push_back(static_cast<Token>(rng.uniform_int(1, 3)));
    CHECK(count_occurrences(word, pat) == oracle::count_occurrences(word, pat));
  }
}

TEST_CASE("frequency stats") {
  SUBCASE("empty extraction gives the empty marker") {
    CHECK(frequency_stats({}, kExampleWord).empty);
  }

  SUBCASE("single string occurring once") {
    Word w{{3, 1, 2}, 3};
    ExtractOptions opt;
    opt.count = 10;
    auto strings = extract_decreasing(w, opt);  // one string: 3 1 2
    FrequencyStats fs = frequency_stats(strings, w);
    CHECK_FALSE(fs.empty);
    CHECK(fs.max == 1);
    CHECK(fs.min == 1);
    CHECK(fs.mean == doctest::Approx(1.0));
    CHECK(fs.stddev == 0.0);
    CHECK(fs.repeated_distinct == 0);
  }

  SUBCASE("the example word counts") {
    // sigma3 sigma1 sigma1 occurs exactly once in the example word
    CHECK(count_occurrences(kExampleWord, std::vector<Token>{3, 1, 1}) == 1);
  }

  SUBCASE("length-1 strings are tallied separately and excluded from the histogram") {
    Word w{{3, 1, 3, 1, 3}, 3};  // runs: 31, 31, 3
    ExtractOptions opt;
    opt.count = 10;
    opt.include_terminator = false;
    auto strings = extract_decreasing(w, opt);
    FrequencyStats fs = frequency_stats(strings, w);
    CHECK(fs.length_one_count == 1);
    CHECK(fs.histogram == std::map<size_t, size_t>{{2, 2}});
    CHECK(fs.distinct_strings == 1);  // "3 1" deduplicated
    CHECK(fs.max == 2);               // it occurs twice in w
    CHECK(fs.repeated_distinct == 1);
    CHECK(fs.repeated_min == 2);
  }

  SUBCASE("counts match the naive counter on a bigger word") {
    Word w = random_word(6, 10000, Rng(8, 0));
    ExtractOptions opt;
    opt.count = 200;
    auto strings = extract_decreasing(w, opt);
    FrequencyStats fs = frequency_stats(strings, w);
    REQUIRE_FALSE(fs.empty);

    std::vector<std::vector<Token>> distinct;
    for (const auto& s : strings) {
      if (s.length() >= 2) distinct.push_back(s.tokens);
    }
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    CHECK(fs.distinct_strings == distinct.size());
    uint64_t max_count = 0;
    for (const auto& pat : distinct) {
      max_count = std::max(max_count, oracle::count_occurrences(w, pat));
    }
    CHECK(fs.max == max_count);
  }
}

TEST_CASE("pass_profile") {
  Word w = random_word(10, 30000, Rng(21, 0));
  RelationSet rs = braid_relations(10);
  ExtractOptions opt;
  opt.count = 500;
  opt.region_begin = w.size() / 3;
  opt.region_end = 2 * w.size() / 3;

  SUBCASE("checkpoint 0 is the unreduced word") {
    auto profile = pass_profile(w, rs, {0}, opt);
    REQUIRE(profile.size() == 1);
    CHECK(profile[0].first == 0);
    FrequencyStats direct = frequency_stats(extract_decreasing(w, opt), w);
    CHECK(profile[0].second.mean == direct.mean);
    CHECK(profile[0].second.histogram == direct.histogram);
  }

  SUBCASE("reduction lengthens decreasing runs") {
    auto profile = pass_profile(w, rs, {0, 1}, opt, 0, PassStrategy::per_rule_sweep);
    REQUIRE(profile.size() == 2);
    auto mean_length = [](const FrequencyStats& fs) {
      double total = 0, count = 0;
      for (const auto& [len, c] : fs.histogram) {
        total += static_cast<double>(len) * static_cast<double>(c);
        count += static_cast<double>(c);
      }
      total += static_cast<double>(fs.length_one_count);
      count += static_cast<double>(fs.length_one_count);
      return total / count;
    };
    CHECK(mean_length(profile[1].second) >= mean_length(profile[0].second));
  }

  SUBCASE("checkpoints must ascend") {
    CHECK_THROWS_AS(pass_profile(w, rs, {1, 1}, opt), std::invalid_argument);
  }
}
