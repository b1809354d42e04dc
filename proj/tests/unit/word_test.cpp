#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "scatfact/error.hpp"
#include "scatfact/family.hpp"
#include "scatfact/word.hpp"

using namespace scatfact;

namespace {
BinaryWord W(const char* s) { return BinaryWord::parse(s); }
}  // namespace

TEST(Parse, ReadsSymbols) {
  auto w = W("abba");
  EXPECT_EQ(w.size(), 4u);
  EXPECT_EQ(w.count(Symbol::a), 2u);
  EXPECT_EQ(w.count(Symbol::b), 2u);
  EXPECT_EQ(w[0], Symbol::a);
  EXPECT_EQ(w[1], Symbol::b);
  EXPECT_EQ(w.str(), "abba");
}

TEST(Parse, EmptyWord) {
  auto w = W("");
  EXPECT_TRUE(w.empty());
  EXPECT_EQ(w.str(), "");
  EXPECT_EQ(canonical(w), w);
}

TEST(Parse, RejectsForeignSymbolWithPosition) {
  try {
    W("abc");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 3u);
  }
  EXPECT_THROW(W("ab ba"), ParseError);
  EXPECT_THROW(W("A"), ParseError);
}

TEST(Parse, RoundTripBeyondOneLimb) {
  std::mt19937_64 rng(7);
  for (std::size_t n : {0u, 1u, 63u, 64u, 65u, 127u, 128u, 200u}) {
    auto s = oracle::random_word(rng, n);
    EXPECT_EQ(W(s.c_str()).str(), s);
  }
}

TEST(Index, MsbFirstEncoding) {
  EXPECT_EQ(W("b").index(), 1u);
  EXPECT_EQ(W("ba").index(), 2u);
  EXPECT_EQ(W("abb").index(), 3u);
  EXPECT_EQ(BinaryWord::from_index(6, 3).str(), "bba");
  EXPECT_EQ(BinaryWord::from_index(0, 0).str(), "");
  EXPECT_THROW(BinaryWord::from_index(8, 3), RangeError);
}

TEST(Symmetry, Examples) {
  EXPECT_EQ(reverse(W("abba")).str(), "abba");
  EXPECT_EQ(reverse(W("aab")).str(), "baa");
  EXPECT_EQ(reverse(W("")).str(), "");
  EXPECT_EQ(rename(W("ab")).str(), "ba");
  EXPECT_EQ(rename(W("aab")).str(), "bba");
  EXPECT_EQ(rename(W("")).str(), "");
  EXPECT_EQ(canonical(W("baab")).str(), "abba");
  EXPECT_EQ(canonical(W("aabb")).str(), "aabb");
  EXPECT_EQ(canonical(W("ba")).str(), "ab");
}

TEST(Symmetry, GroupLawsExhaustiveTo12) {
  for (std::size_t n = 0; n <= 12; ++n)
    for (const auto& s : oracle::all_words(n)) {
      auto w = W(s.c_str());
      ASSERT_EQ(reverse(reverse(w)), w);
      ASSERT_EQ(rename(rename(w)), w);
      ASSERT_EQ(reverse(rename(w)), rename(reverse(w)));
      auto c = canonical(w);
      ASSERT_EQ(c.str(), oracle::canonical(s)) << s;
      ASSERT_EQ(canonical(reverse(w)), c);
      ASSERT_EQ(canonical(rename(w)), c);
      ASSERT_EQ(canonical(rename(reverse(w))), c);
      ASSERT_EQ(canonical(c), c);
      ASSERT_EQ(is_canonical(w), c == w);
      if (n > 0) ASSERT_EQ(c[0], Symbol::a);
    }
}

TEST(Symmetry, RandomizedTo20AndLongWords) {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 4000; ++t) {
    std::size_t n = 13 + rng() % 8;
    if (t % 10 == 0) n = 60 + rng() % 80;  // multi-limb path
    auto s = oracle::random_word(rng, n);
    auto w = W(s.c_str());
    ASSERT_EQ(reverse(w).str(), oracle::reversed(s));
    ASSERT_EQ(rename(w).str(), oracle::renamed(s));
    ASSERT_EQ(canonical(w).str(), oracle::canonical(s));
    ASSERT_EQ(canonical(reverse(w)), canonical(w));
    ASSERT_EQ(canonical(rename(w)), canonical(w));
  }
}

TEST(Order, LexicographicWithPrefixFirst) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 3000; ++t) {
    auto x = oracle::random_word(rng, rng() % 70), y = oracle::random_word(rng, rng() % 70);
    if (t % 3 == 0) y = x + oracle::random_word(rng, rng() % 5);
    EXPECT_EQ(W(x.c_str()) < W(y.c_str()), x < y) << x << " vs " << y;
    EXPECT_EQ(W(x.c_str()) == W(y.c_str()), x == y);
  }
}

TEST(Blocks, Examples) {
  auto d = blocks(W("abaaabaabb"));
  std::vector<scatfact::Run> want{{Symbol::a, 1}, {Symbol::b, 1}, {Symbol::a, 3},
                        {Symbol::b, 1}, {Symbol::a, 2}, {Symbol::b, 2}};
  EXPECT_EQ(d.runs, want);
  EXPECT_EQ(d.blocks_of(Symbol::a), 3u);
  EXPECT_EQ(d.blocks_of(Symbol::b), 3u);
  EXPECT_EQ(blocks(W("aaaa")).runs, (std::vector<scatfact::Run>{{Symbol::a, 4}}));
  EXPECT_TRUE(blocks(W("")).runs.empty());
}

TEST(Blocks, ExpansionReproducesWord) {
  for (std::size_t n = 0; n <= 10; ++n)
    for (const auto& s : oracle::all_words(n)) {
      auto w = W(s.c_str());
      auto d = blocks(w);
      ASSERT_EQ(d.expand(), w);
      for (std::size_t t = 1; t < d.runs.size(); ++t) ASSERT_NE(d.runs[t].symbol, d.runs[t - 1].symbol);
    }
}

TEST(Balance, Classes) {
  EXPECT_EQ(balance(W("abba")).c, 0u);
  EXPECT_TRUE(balance(W("abba")).strictly_balanced);
  EXPECT_EQ(balance(W("abaa")).c, 2u);
  EXPECT_FALSE(balance(W("abaa")).strictly_balanced);
  for (std::size_t n = 0; n <= 8; ++n)
    for (const auto& s : oracle::all_words(n)) EXPECT_EQ(balance(W(s.c_str())).c % 2, n % 2);
}

TEST(Family, Examples) {
  EXPECT_EQ(family({.family = Family::ab_power_a, .k = 3, .c = 2}).str(), "abaa");
  EXPECT_EQ(family({.family = Family::lem2k_bka, .k = 3}).str(), "aabbba");
  EXPECT_EQ(family({.family = Family::alternating, .n = 7}).str(), "abababa");
  EXPECT_EQ(family({.family = Family::ak_bk, .k = 2}).str(), "aabb");
  EXPECT_EQ(family({.family = Family::gensquare, .k = 4, .i = 2}).str(), "aabbbbaa");
  EXPECT_EQ(family({.family = Family::one_missing, .k = 3, .i = 0}).str(), "aabbab");
  EXPECT_EQ(family({.family = Family::lem2k_aba, .k = 3}).str(), "aababb");
  EXPECT_EQ(family({.family = Family::gensquare_baab, .k = 5, .j = 1}).str(), "aaabaabbbb");
  EXPECT_EQ(family({.family = Family::gensquare_bab, .k = 5, .j = 2}).str(), "aaabbabbba");
  EXPECT_EQ(family({.family = Family::gensquare_bbab, .k = 4}).str(), "aaabbabb");
  EXPECT_EQ(family({.family = Family::nk_even, .k = 8, .i = 2}).str(), "aaaabbbbaaaabbbb");
  EXPECT_EQ(family({.family = Family::nk_even, .k = 5, .i = 2}).str(), "abaabbaabb");
  EXPECT_EQ(family({.family = Family::nk_odd, .k = 5, .i = 2}).str(), "aaabbbbbaa");
  EXPECT_EQ(family({.family = Family::last_gap, .k = 4, .i = 0}).str(), "aabbabba");
  EXPECT_EQ(family({.family = Family::theta, .k = 4}).str(), "abbbaaab");
}

TEST(Family, RangeViolationsNameTheConstraint) {
  try {
    family({.family = Family::gensquare, .k = 4, .i = 3});
    FAIL();
  } catch (const RangeError& e) {
    EXPECT_NE(std::string(e.what()).find("i <= floor(k/2)"), std::string::npos);
  }
  EXPECT_THROW(family({.family = Family::gensquare, .k = 4, .i = 0}), RangeError);
  EXPECT_THROW(family({.family = Family::one_missing, .k = 4, .i = 3}), RangeError);
  EXPECT_THROW(family({.family = Family::ab_power_a, .k = 2, .c = 3}), RangeError);
  EXPECT_THROW(family({.family = Family::gensquare_bab, .k = 5, .j = 5}), RangeError);
  EXPECT_THROW(family({.family = Family::last_gap, .k = 4, .i = 2}), RangeError);
  EXPECT_THROW(family({.family = Family::nk_even, .k = 4, .i = 1}), RangeError);
}

TEST(Family, AdvertisedBalance) {
  for (std::size_t k = 1; k <= 12; ++k) {
    for (std::size_t i = 1; 2 * i <= k; ++i)
      EXPECT_TRUE(balance(family({.family = Family::gensquare, .k = k, .i = i})).strictly_balanced);
    for (std::size_t c = 0; c <= k; ++c) {
      auto w = family({.family = Family::ab_power_a, .k = k, .c = c});
      EXPECT_EQ(balance(w).c, c);
      EXPECT_EQ(w.size(), 2 * k - c);
    }
    EXPECT_TRUE(balance(family({.family = Family::lem2k_aba, .k = k})).strictly_balanced);
    EXPECT_TRUE(balance(family({.family = Family::lem2k_bka, .k = k})).strictly_balanced);
    EXPECT_TRUE(balance(family({.family = Family::theta, .k = k})).strictly_balanced);
    if (k >= 2) {
      for (std::size_t i = 0; i + 2 <= k; ++i)
        EXPECT_TRUE(balance(family({.family = Family::one_missing, .k = k, .i = i})).strictly_balanced);
      for (std::size_t j = 1; j < k; ++j) {
        EXPECT_TRUE(balance(family({.family = Family::gensquare_bab, .k = k, .j = j})).strictly_balanced);
        EXPECT_TRUE(balance(family({.family = Family::gensquare_baab, .k = k, .j = j})).strictly_balanced);
      }
    }
    for (std::size_t i = 2; i <= 3 && i <= k; ++i) {
      EXPECT_EQ(family({.family = Family::nk_even, .k = k, .i = i}).size(), 2 * k);
      EXPECT_TRUE(balance(family({.family = Family::nk_odd, .k = k, .i = i})).strictly_balanced);
    }
    for (std::size_t i = 0; i + 3 <= k; ++i)
      EXPECT_TRUE(balance(family({.family = Family::last_gap, .k = k, .i = i})).strictly_balanced);
  }
}
