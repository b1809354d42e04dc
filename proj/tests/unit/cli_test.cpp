#include <cstdio>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "cli.hpp"

using scatfact::cli::run;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, NoSubcommandIsUsageError) {
  auto r = call({});
  EXPECT_EQ(r.code, 64);
  EXPECT_NE(r.err.find("spectrum"), std::string::npos);
  EXPECT_EQ(call({"frobnicate"}).code, 64);
  EXPECT_EQ(call({"spectrum", "--word", "ab"}).code, 64);  // --k missing
  EXPECT_EQ(call({"spectrum", "--word", "ab", "--k", "1", "--format", "xml"}).code, 64);
}

TEST(Cli, HelpExitsZero) {
  auto r = call({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("check-conjecture"), std::string::npos);
}

TEST(Cli, SpectrumFormats) {
  auto r = call({"spectrum", "--word", "abba", "--k", "3", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "[\"aba\",\"abb\",\"bba\"]\n");
  EXPECT_EQ(call({"spectrum", "--word", "abba", "--k", "3"}).out, "aba\nabb\nbba\n");
  EXPECT_EQ(call({"spectrum", "--word", "abba", "--k", "3", "--format", "csv"}).out,
            "index,word\n2,aba\n3,abb\n6,bba\n");
}

TEST(Cli, BadWordIsDomainError) {
  auto r = call({"spectrum", "--word", "abca", "--k", "2"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("3"), std::string::npos);
  EXPECT_EQ(call({"spectrum", "--word", "ab", "--k", "30"}).code, 1);
}

TEST(Cli, Card) {
  auto r = call({"card", "--word", "bababaa", "--k", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "12\n");
}

TEST(Cli, ClosedFormVerify) {
  auto r = call({"closed-form", "square", "--k", "4", "--verify"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "value 9\noracle 9\nmatch\n");
  auto bad = call({"closed-form", "gensquares4", "--k", "5", "--j", "2", "--verify"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.out.find("mismatch"), std::string::npos);
  auto j = nlohmann::json::parse(call({"closed-form", "ab-power-a", "--k", "4", "--c", "2", "--i", "4",
                                       "--verify", "--format", "json"}).out);
  EXPECT_EQ(j["value"], 8);
  EXPECT_EQ(j["oracle"], 8);
  EXPECT_TRUE(j["match"].get<bool>());
  EXPECT_EQ(call({"closed-form", "nope", "--k", "3"}).code, 1);
  EXPECT_EQ(call({"closed-form", "gensquares1", "--k", "6"}).code, 1);  // missing --i
  EXPECT_EQ(call({"closed-form", "remark", "--i", "3", "--verify"}).code, 0);
}

TEST(Cli, EnumerateCheck) {
  auto r = call({"enumerate", "alternating", "--n", "6", "--k", "3", "--check"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("check ok"), std::string::npos);
  std::istringstream lines(r.out);
  std::string line;
  std::size_t n = 0;
  while (std::getline(lines, line)) ++n;
  EXPECT_EQ(n, 8u);  // ababab contains every word of length 3
  EXPECT_EQ(call({"enumerate", "ab-power-a", "--k", "4", "--c", "2", "--i", "3", "--verify"}).code, 0);
  EXPECT_EQ(call({"enumerate", "zigzag", "--k", "3"}).code, 1);
}

TEST(Cli, Reconstruct) {
  auto r = call({"reconstruct", "two-blocks", "--word", "aabbbabbaa", "--strict"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("recovered aabbbabbaa"), std::string::npos);
  auto g = nlohmann::json::parse(call({"reconstruct", "--word", "abaabb", "--format", "json"}).out);
  EXPECT_EQ(g["recovered"], "abaabb");
  EXPECT_EQ(g["method"], "general");
  EXPECT_LE(g["queries"].get<int>(), 8);
  EXPECT_EQ(call({"reconstruct", "--word", "aab"}).code, 1);  // not balanced
}

TEST(Cli, ExploreGaps) {
  auto r = call({"explore-gaps", "--k", "4", "--orbits", "--strict", "--jobs", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("missing 6 7 11"), std::string::npos);
  auto j = nlohmann::json::parse(call({"explore-gaps", "--k", "3", "--format", "json"}).out);
  EXPECT_EQ(j["missing"], nlohmann::json::array({5}));
  const std::string path = testing::TempDir() + "scatfact_gaps.csv";
  EXPECT_EQ(call({"explore-gaps", "--k", "3", "--csv", path}).code, 0);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "k,cardinality,achieved,witness");
  std::remove(path.c_str());
  EXPECT_EQ(call({"explore-gaps", "--k", "12"}).code, 1);
}

TEST(Cli, MaxKEnvironmentRaisesGuard) {
  ::setenv("SCATFACT_MAX_K", "2", 1);
  auto r = call({"explore-gaps", "--k", "3"});
  ::unsetenv("SCATFACT_MAX_K");
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(call({"explore-gaps", "--k", "3"}).code, 0);
}

TEST(Cli, CheckConjecture) {
  auto lg = call({"check-conjecture", "last-gap", "--k", "6", "--strict"});
  EXPECT_EQ(lg.code, 0);
  EXPECT_NE(lg.out.find("skipped"), std::string::npos);
  auto nk = call({"check-conjecture", "nk", "--i", "2", "--k", "8", "--strict"});
  EXPECT_EQ(nk.code, 2);
  EXPECT_EQ(call({"check-conjecture", "nk", "--i", "2", "--k", "8"}).code, 0);
  auto th = nlohmann::json::parse(call({"check-conjecture", "theta", "--k", "6", "--format", "json"}).out);
  EXPECT_TRUE(th["holds"].get<bool>());
  EXPECT_EQ(call({"check-conjecture", "reconstruction", "--k", "3", "--strict"}).code, 0);
  EXPECT_EQ(call({"check-conjecture", "unknown", "--k", "3"}).code, 1);
}

TEST(Cli, OutputIndependentOfWorkerCount) {
  for (const char* fmt : {"text", "json", "csv"}) {
    auto one = call({"explore-gaps", "--k", "6", "--jobs", "1", "--format", fmt});
    auto four = call({"explore-gaps", "--k", "6", "--jobs", "4", "--format", fmt});
    EXPECT_EQ(one.code, 0);
    EXPECT_EQ(one.out, four.out) << fmt;
    EXPECT_EQ(one.out, call({"explore-gaps", "--k", "6", "--jobs", "1", "--format", fmt}).out);
  }
  auto a = call({"check-conjecture", "reconstruction", "--k", "4", "--jobs", "1", "--format", "json"});
  auto b = call({"check-conjecture", "reconstruction", "--k", "4", "--jobs", "3", "--format", "json"});
  EXPECT_EQ(a.out, b.out);
}
