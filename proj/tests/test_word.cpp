#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "kurlab/counting.hpp"
#include "kurlab/word.hpp"

using namespace kurlab;

namespace {

Word w(const PointedChain& c, const char* text) { return parse_word(c, text); }

// all words over the chain up to max_len, via an odometer
template <typename Fn>
void for_all_words(const PointedChain& c, unsigned max_len, Fn&& fn) {
  auto letters = c.letters();
  for (unsigned len = 1; len <= max_len; ++len) {
    std::vector<unsigned> digits(len, 0);
    for (;;) {
      Word word;
      for (unsigned d : digits) word.letters.push_back(letters[d]);
      fn(word);
      int i = static_cast<int>(len) - 1;
      while (i >= 0 && ++digits[i] == letters.size()) digits[i--] = 0;
      if (i < 0) break;
    }
  }
}

}  // namespace

TEST_CASE("parsing and printing") {
  PointedChain c22(2, 2);
  CHECK(to_string(w(c22, "i0 k1 i1")) == "i0 k1 i1");
  CHECK(to_string(parse_full_word(c22, "c k0 i0")) == "c k0 i0");
  CHECK(parse_full_word(c22, "k0").complemented == false);
  CHECK_THROWS_AS(parse_word(c22, ""), input_error);
  CHECK_THROWS_AS(parse_word(c22, "i2"), input_error);   // outside the chain
  CHECK_THROWS_AS(parse_word(c22, "q0"), input_error);   // bad token
  CHECK_THROWS_AS(parse_word(c22, "c i0"), input_error); // complement needs a full word
  CHECK_THROWS_AS(parse_full_word(c22, "i0 c k0"), input_error);
  CHECK_THROWS_AS(parse_full_word(c22, "c"), input_error);
}

TEST_CASE("alternating test") {
  PointedChain c22(2, 2);
  CHECK(is_alternating(w(c22, "i0"), c22));
  CHECK(is_alternating(w(c22, "1"), c22));
  CHECK(is_alternating(w(c22, "i0 k0 i1"), c22));
  CHECK(!is_alternating(w(c22, "i0 i1"), c22));
  CHECK(!is_alternating(w(c22, "i0 1"), c22));  // the unit never alternates
  CHECK(!is_alternating(w(c22, "1 k0"), c22));
  CHECK_THROWS_AS(is_alternating(Word{{Letter::interior(4)}}, c22), input_error);
}

TEST_CASE("classification of the basic shapes") {
  PointedChain c11(1, 1);
  CHECK(classify(w(c11, "1"), c11) == WordClass{WordFamily::single, 0});
  CHECK(classify(w(c11, "i0"), c11) == WordClass{WordFamily::single, 0});
  CHECK(classify(w(c11, "i0 k0"), c11) == WordClass{WordFamily::vmp, 0});
  CHECK(classify(w(c11, "k0 i0"), c11) == WordClass{WordFamily::vpm, 0});
  CHECK(classify(w(c11, "i0 k0 i0"), c11) == WordClass{WordFamily::wminus, 1});
  CHECK(classify(w(c11, "k0 i0 k0"), c11) == WordClass{WordFamily::wplus, 1});
  CHECK(!classify(w(c11, "i0 i0"), c11));
  CHECK(!classify(w(c11, "i0 k0 i0 k0"), c11));

  // a repeated-closure word whose pivot is right of center
  PointedChain c21(2, 1);
  CHECK(classify(w(c21, "i1 k0 i0 k0"), c21) == WordClass{WordFamily::wplus, 2});
  CHECK(classify(w(c21, "i1 k0 i0 k0 i1"), c21) == WordClass{WordFamily::wplus, 2});
  CHECK(!classify(w(c21, "i0 k0 i1 k0"), c21));
}

TEST_CASE("classified words are alternating") {
  PointedChain c22(2, 2);
  for_all_words(c22, 5, [&](const Word& word) {
    if (classify(word, c22)) CHECK(is_alternating(word, c22));
  });
}

TEST_CASE("enumeration of the smallest chains") {
  PointedChain c11(1, 1);
  auto words = enumerate_kuratowski(c11);
  std::vector<std::string> got;
  for (const auto& x : words) got.push_back(to_string(x));
  CHECK(got == std::vector<std::string>{"1", "i0", "k0", "i0 k0", "k0 i0", "i0 k0 i0",
                                        "k0 i0 k0"});

  PointedChain c00(0, 0);
  auto unit_only = enumerate_kuratowski(c00);
  REQUIRE(unit_only.size() == 1);
  CHECK(to_string(unit_only[0]) == "1");

  CHECK(enumerate_full(c11).size() == 14);
  CHECK(enumerate_full(c00).size() == 2);
  CHECK(enumerate_full(PointedChain(2, 2)).size() == 126);
}

TEST_CASE("degenerate chains have only single letters") {
  for (auto [n, p] : {std::pair{3u, 0u}, {0u, 3u}, {0u, 1u}}) {
    PointedChain c(n, p);
    auto words = enumerate_kuratowski(c);
    CHECK(words.size() == n + p + 1);
    for (const auto& x : words) CHECK(x.length() == 1);
  }
}

TEST_CASE("enumeration counts match the closed formulas") {
  for (unsigned n = 0; n <= 4; ++n)
    for (unsigned p = 0; p <= 4; ++p) {
      PointedChain c(n, p);
      auto words = enumerate_kuratowski(c);
      CHECK(BigInt(words.size()) == kuratowski_number(n, p));
      std::map<WordFamily, unsigned> tally;
      for (const auto& x : words) {
        auto cls = classify(x, c);
        REQUIRE(cls.has_value());
        ++tally[cls->family];
      }
      FamilyCounts fc = family_counts(n, p);
      CHECK(BigInt(tally[WordFamily::vmp]) == fc.vmp);
      CHECK(BigInt(tally[WordFamily::vpm]) == fc.vpm);
      CHECK(BigInt(tally[WordFamily::wplus]) == fc.wplus);
      CHECK(BigInt(tally[WordFamily::wminus]) == fc.wminus);
      CHECK(tally[WordFamily::single] == n + p + 1);
    }
}

TEST_CASE("enumeration is canonical: sorted and duplicate-free") {
  PointedChain c(3, 2);
  auto words = enumerate_kuratowski(c);
  CHECK(std::is_sorted(words.begin(), words.end(), WordOrder{}));
  CHECK(std::adjacent_find(words.begin(), words.end()) == words.end());
}

TEST_CASE("brute-force filter produces the same sets") {
  for (auto [n, p] : {std::pair{1u, 1u}, {2u, 1u}, {2u, 2u}}) {
    PointedChain c(n, p);
    unsigned max_len = 2 * (n + p) - 1;
    std::set<std::vector<Letter>> brute;
    for_all_words(c, max_len, [&](const Word& word) {
      if (classify(word, c)) brute.insert(word.letters);
    });
    std::set<std::vector<Letter>> constructed;
    for (const auto& x : enumerate_kuratowski(c)) constructed.insert(x.letters);
    CHECK(brute == constructed);
  }
}

TEST_CASE("maximum word length over the square chains") {
  for (unsigned n = 1; n <= 3; ++n) {
    auto words = enumerate_kuratowski(PointedChain(n, n));
    std::size_t longest = 0;
    for (const auto& x : words) longest = std::max(longest, x.length());
    CHECK(longest == 4 * n - 1);
  }
}

TEST_CASE("enumeration cap") {
  CHECK_THROWS_AS(enumerate_kuratowski(PointedChain(7, 1)), limit_error);
  CHECK_THROWS_AS(enumerate_full(PointedChain(1, 9)), limit_error);
  CHECK_NOTHROW(enumerate_kuratowski(PointedChain(5, 1), EnumLimits{5}));
  CHECK_THROWS_AS(enumerate_kuratowski(PointedChain(5, 1), EnumLimits{4}), limit_error);
}
