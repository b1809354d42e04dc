#include <map>
#include <set>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "oracles.hpp"
#include "scatfact/error.hpp"
#include "scatfact/explorer.hpp"
#include "scatfact/family.hpp"

using namespace scatfact;

namespace {

std::map<std::uint64_t, std::set<std::string>> brute_cardinalities(std::size_t k) {
  std::map<std::uint64_t, std::set<std::string>> out;
  for (const auto& s : oracle::balanced_words(k)) out[oracle::spectrum(s, k).size()].insert(oracle::canonical(s));
  return out;
}

std::set<std::string> brute_balanced(const std::string& w, std::size_t m) {
  std::set<std::string> out;
  for (auto& u : oracle::spectrum(w, m))
    if (2 * std::count(u.begin(), u.end(), 'a') == static_cast<long>(m)) out.insert(u);
  return out;
}

const VerdictEntry* find_claim(const ConjectureVerdict& v, const std::string& needle) {
  for (const auto& e : v.entries)
    if (e.claim.find(needle) != std::string::npos) return &e;
  return nullptr;
}

}  // namespace

TEST(Balanced, GosperEnumeration) {
  for (std::size_t k = 0; k <= 10; ++k) {
    auto idx = balanced_word_indices(k);
    ASSERT_EQ(idx.size(), oracle::balanced_words(k).size());
    for (std::size_t t = 0; t < idx.size(); ++t) {
      ASSERT_EQ(std::popcount(idx[t]), static_cast<int>(k));
      if (t) ASSERT_LT(idx[t - 1], idx[t]);
    }
  }
}

TEST(Cardinalities, MatchBruteForce) {
  for (std::size_t k = 3; k <= 6; ++k) {
    auto want = brute_cardinalities(k);
    for (bool orbits : {false, true})
      for (unsigned jobs : {1u, 3u}) {
        ExplorerOptions o;
        o.orbits = orbits;
        o.jobs = jobs;
        auto r = achievable_cardinalities(k, o);
        std::map<std::uint64_t, std::set<std::string>> got;
        for (auto& [n, ws] : r.achieved)
          for (auto& w : ws) got[n].insert(w.str());
        ASSERT_EQ(got, want) << "k=" << k << " orbits=" << orbits;
        ASSERT_EQ(r.orbit_reduced, orbits);
        if (!orbits) ASSERT_EQ(r.words_examined, oracle::balanced_words(k).size());
        else ASSERT_LT(r.words_examined, oracle::balanced_words(k).size());
      }
  }
}

TEST(Cardinalities, KnownMissingValues) {
  auto r3 = achievable_cardinalities(3);
  std::vector<std::uint64_t> keys;
  for (auto& [n, ws] : r3.achieved) keys.push_back(n);
  EXPECT_EQ(keys, (std::vector<std::uint64_t>{4, 6, 7, 8}));
  EXPECT_EQ(r3.missing, (std::vector<std::uint64_t>{5}));
  EXPECT_EQ(achievable_cardinalities(4).missing, (std::vector<std::uint64_t>{6, 7, 11}));
  EXPECT_EQ(achievable_cardinalities(5).missing, (std::vector<std::uint64_t>{7, 8, 9, 11, 15, 17, 25}));
}

TEST(Cardinalities, GuardAndOverride) {
  try {
    achievable_cardinalities(10);
    FAIL();
  } catch (const RangeError& e) {
    EXPECT_NE(std::string(e.what()).find("SCATFACT_MAX_K"), std::string::npos);
  }
  EXPECT_THROW(achievable_cardinalities(2), RangeError);
  EXPECT_THROW(find_balanced_collisions(8, 9), RangeError);
}

TEST(Cardinalities, ReportSerialization) {
  auto r = achievable_cardinalities(3);
  std::ostringstream os;
  write_report_csv(os, r);
  EXPECT_EQ(os.str(), "k,cardinality,achieved,witness\n3,4,1,aaabbb\n3,5,0,\n3,6,1,"
                      + r.achieved.at(6).front().str() + "\n3,7,1," + r.achieved.at(7).front().str() +
                      "\n3,8,1," + r.achieved.at(8).front().str() + "\n");
  auto j = nlohmann::json::parse(report_to_json(r));
  EXPECT_EQ(j["k"], 3);
  EXPECT_EQ(j["missing"], nlohmann::json::array({5}));
  EXPECT_EQ(j["achieved"][0]["cardinality"], 4);
  EXPECT_EQ(j["achieved"][0]["witnesses"][0], "aaabbb");
}

TEST(Gaps, HoldThroughSeven) {
  for (std::size_t k = 3; k <= 7; ++k) {
    auto v = verify_gap_theorems(k);
    EXPECT_TRUE(v.holds()) << verdict_to_text(v);
  }
}

TEST(Gaps, DetectsAPlantedViolation) {
  auto r = achievable_cardinalities(5);
  r.achieved[5 + 2].push_back(BinaryWord::parse("aabbabbaab"));
  auto v = verify_gap_theorems(r);
  EXPECT_FALSE(v.holds());
  for (const auto& e : v.entries)
    if (e.status == Status::fails) EXPECT_TRUE(e.witness);
}

TEST(Characterizations, HoldThroughSix) {
  for (std::size_t k = 3; k <= 6; ++k) {
    auto v = verify_characterizations(k);
    EXPECT_TRUE(v.holds()) << verdict_to_text(v);
  }
}

TEST(LastGap, HoldsWhereDefined) {
  for (std::size_t k = 4; k <= 14; ++k) {
    auto v = check_last_gap_conjecture(k);
    EXPECT_TRUE(v.holds()) << verdict_to_text(v);
    ASSERT_EQ(v.entries.size(), k - 1);
    EXPECT_EQ(v.entries.back().status, Status::skipped);
    for (std::size_t t = 0; t + 1 < v.entries.size(); ++t) EXPECT_EQ(v.entries[t].status, Status::holds);
  }
  for (std::size_t k = 4; k <= 7; ++k)
    for (std::size_t i = 0; i + 3 <= k; ++i) {
      auto w = "aabb" + oracle::power("ab", k - 3 - i) + "ba" + oracle::power("ab", i);
      EXPECT_EQ(oracle::spectrum(w, k).size(), (1u << k) - 2 - i) << w;
    }
}

TEST(Theta, HoldsAndAgreesWithBruteForce) {
  auto v = check_theta_conjecture(2, 12);
  EXPECT_TRUE(v.holds()) << verdict_to_text(v);
  for (std::size_t k = 2; k <= 7; ++k) {
    auto w = "a" + oracle::rep('b', k - 1) + oracle::rep('a', k - 1) + "b";
    EXPECT_EQ(oracle::spectrum(w, k).size(), 4 * (k - 1));
    EXPECT_EQ(oracle::reversed(w), oracle::renamed(w));
    auto l = oracle::spectrum(oracle::reversed(w), k).size();
    if (l >= 12) EXPECT_EQ(4 * oracle::spectrum("a" + w + "b", k + 1).size(), 9 * l - 20) << k;
  }
  EXPECT_TRUE(is_theta_palindrome(BinaryWord::parse("ab")));
  EXPECT_FALSE(is_theta_palindrome(BinaryWord::parse("aa")));
}

TEST(Collisions, MatchBruteForcePairs) {
  for (std::size_t k = 1; k <= 4; ++k)
    for (std::size_t m = 0; m <= 2 * k; m += 2) {
      std::map<std::set<std::string>, std::vector<std::string>> groups;
      for (const auto& s : oracle::balanced_words(k)) groups[brute_balanced(s, m)].push_back(s);
      std::set<std::pair<std::string, std::string>> want;
      for (auto& [key, ws] : groups)
        for (std::size_t x = 0; x < ws.size(); ++x)
          for (std::size_t y = x + 1; y < ws.size(); ++y) want.emplace(std::min(ws[x], ws[y]), std::max(ws[x], ws[y]));
      std::set<std::pair<std::string, std::string>> got;
      for (auto& [a, b] : find_balanced_collisions(k, m)) {
        ASSERT_LT(a, b);
        got.emplace(a.str(), b.str());
      }
      ASSERT_EQ(got, want) << "k=" << k << " m=" << m;
    }
}

TEST(Collisions, SymmetricDifferenceExamples) {
  auto d = balanced_symmetric_difference(BinaryWord::parse("ababab"), BinaryWord::parse("bababa"), 4);
  std::vector<std::string> s;
  for (auto& w : d) s.push_back(w.str());
  EXPECT_EQ(s, (std::vector<std::string>{"aabb", "bbaa"}));
  d = balanced_symmetric_difference(BinaryWord::parse("ababab"), BinaryWord::parse("ababba"), 4);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].str(), "baab");
}

TEST(Reconstruction, NoCollisionAtKPrimeButSomeTwoBelow) {
  for (std::size_t k = 2; k <= 5; ++k) {
    auto v = check_reconstruction_conjecture(k);
    EXPECT_TRUE(v.holds()) << verdict_to_text(v);
    ASSERT_EQ(v.entries.size(), 2u);
    EXPECT_EQ(v.entries[0].actual, 0u);
    EXPECT_EQ(v.entries[1].status, Status::holds) << "negative control found nothing at k=" << k;
    EXPECT_GT(*v.entries[1].actual, 0u);
  }
}

TEST(Nk, WeakCompositionEqualityFailsStrictHolds) {
  auto v = check_nk_families(2, 8);
  const auto* weak = find_claim(v, "weak bounded compositions");
  ASSERT_TRUE(weak);
  EXPECT_EQ(weak->status, Status::fails);
  EXPECT_EQ(weak->expected, 85u);  // compositions
  EXPECT_EQ(weak->actual, 65u);    // measured
  const auto* strict = find_claim(v, "strict bounded compositions");
  ASSERT_TRUE(strict);
  EXPECT_EQ(strict->status, Status::holds);
  EXPECT_EQ(strict->actual, 31u);
  for (const auto& e : v.entries)
    if (e.claim.find("count >=") != std::string::npos || e.claim.find("count <=") != std::string::npos)
      EXPECT_EQ(e.status, Status::holds) << e.claim;
}

TEST(Nk, BoundsHoldOverARange) {
  for (std::size_t i : {2u, 3u})
    for (std::size_t k = i; k <= 14; ++k) {
      auto v = check_nk_families(i, k);
      for (const auto& e : v.entries)
        if (e.claim.find("weak") == std::string::npos) EXPECT_NE(e.status, Status::fails) << e.claim << " " << k;
    }
  EXPECT_THROW(check_nk_families(4, 8), RangeError);
}

TEST(FullSpectrum, PairCountDecidesFullSpectrumTo14) {
  auto v = verify_full_spectrum_corollary(14);
  EXPECT_TRUE(v.holds()) << verdict_to_text(v);
}

TEST(Verdict, JsonShape) {
  auto v = check_last_gap_conjecture(4);
  auto j = nlohmann::json::parse(verdict_to_json(v));
  EXPECT_EQ(j["id"], "last-gap");
  EXPECT_TRUE(j["holds"].get<bool>());
  EXPECT_EQ(j["entries"].size(), 3u);
  EXPECT_EQ(j["entries"][2]["status"], "skipped");
  EXPECT_EQ(conjecture_ids().size(), 7u);
}
