#include <gtest/gtest.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "psweyl/cli.hpp"
#include "psweyl/polynomial.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::ostringstream out, err;
  std::istringstream in(input);
  const int code = psw::cli::run(args, out, err, in);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

const char* const kSumOfSquares =
    R"({"vars":2,"terms":[{"exp":[2,0],"num":"1","den":"1"},{"exp":[0,2],"num":"1","den":"1"}]})";

}  // namespace

TEST(Cli, PsExample) {
  const auto r = run({"ps", "--group", "A2", "--u", "perm:213", "--w", "perm:321"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(first_line(r.out), "x1*x2 + 1/2*x2^2");
  EXPECT_NE(r.out.find("chains=2"), std::string::npos);
  EXPECT_NE(r.out.find("methods_agree=true"), std::string::npos);
}

TEST(Cli, PsTrivialAndIncomparable) {
  EXPECT_EQ(first_line(run({"ps", "--group", "A2", "--u", "perm:213", "--w", "perm:213"}).out), "1");
  const auto r = run({"ps", "--group", "A2", "--u", "perm:231", "--w", "perm:312"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(first_line(r.out), "0 (incomparable)");
}

TEST(Cli, PsJsonRoundTripsThePolynomial) {
  const auto r = run({"ps", "--group", "B2", "--u", "id", "--w", "w0", "--output", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  const auto p = psw::poly_from_json(j.at("poly"));
  EXPECT_EQ(p.to_string(), j.at("text").get<std::string>());
  EXPECT_EQ(j.at("chains"), 8);
  EXPECT_EQ(j.at("methods_agree"), true);
}

TEST(Cli, Degree) {
  EXPECT_EQ(run({"degree", "--group", "A2", "--u", "perm:213", "--w", "perm:321", "--lambda", "1,1"}).out, "3\n");
  EXPECT_EQ(run({"degree", "--group", "A2", "--u", "id", "--w", "w0"}).out, "6\n");
  const auto empty = run({"degree", "--group", "A2", "--u", "perm:231", "--w", "perm:312", "--lambda", "1,1"});
  EXPECT_EQ(empty.code, 0);
  EXPECT_EQ(first_line(empty.out), "0 (empty Richardson variety)");
  EXPECT_EQ(run({"degree", "--group", "A2", "--u", "id", "--w", "w0", "--lambda", "1,1,1"}).code, 2);
  EXPECT_EQ(run({"degree", "--group", "A2", "--u", "id", "--w", "w0", "--lambda", "1,-1"}).code, 2);
}

TEST(Cli, ChainsAndInterval) {
  EXPECT_EQ(run({"chains", "--group", "A2", "--u", "perm:123", "--w", "perm:321", "--count-only"}).out, "4\n");
  const auto listed = run({"chains", "--group", "A2", "--u", "perm:213", "--w", "perm:321"});
  EXPECT_NE(listed.out.find("perm:213 < perm:231 < perm:321"), std::string::npos);
  EXPECT_NE(listed.out.find("count=2"), std::string::npos);

  const auto iv = run({"interval", "--group", "A2", "--u", "id", "--w", "w0", "--output", "json"});
  const auto j = nlohmann::json::parse(iv.out);
  EXPECT_EQ(j.at("size"), 6);
  EXPECT_EQ(j.at("edges").size(), 8u);
  EXPECT_EQ(first_line(run({"interval", "--group", "A2", "--u", "perm:231", "--w", "perm:312"}).out),
            "empty (incomparable)");
}

TEST(Cli, LorentzianNegativeControl) {
  const auto r = run({"lorentzian", "--poly", kSumOfSquares});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(first_line(r.out), "false, support-not-M-convex");

  const auto j = nlohmann::json::parse(run({"lorentzian", "--poly", kSumOfSquares, "--output", "json"}).out);
  EXPECT_EQ(j.at("verdict"), false);
  EXPECT_EQ(j.at("reason"), "support-not-M-convex");
}

TEST(Cli, LorentzianFromStdinWithSpotCheck) {
  const std::string poly =
      R"({"vars":2,"terms":[{"exp":[2,1],"num":"1","den":"2"},{"exp":[1,2],"num":"1","den":"2"}]})";
  const auto r = run({"lorentzian", "--poly", "-", "--spot-check", "50", "--seed", "3"}, poly);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(first_line(r.out), "true");
  EXPECT_NE(r.out.find("spot_check=pass"), std::string::npos);
}

TEST(Cli, VerifyTheoremSmallGroups) {
  const auto a1 = run({"verify-theorem", "--group", "A1"});
  EXPECT_EQ(a1.code, 0);
  EXPECT_NE(a1.out.find("pairs_tested=3"), std::string::npos);
  const auto a2 = run({"verify-theorem", "--group", "A2", "--output", "json"});
  EXPECT_EQ(a2.code, 0);
  const auto j = nlohmann::json::parse(a2.out);
  EXPECT_EQ(j.at("pairs_tested"), 19);
  EXPECT_EQ(j.at("status"), "pass");
  EXPECT_EQ(run({"verify-theorem", "--group", "B2"}).code, 0);
}

TEST(Cli, VerifyTheoremIsDeterministicAcrossJobCounts) {
  const auto one = run({"verify-theorem", "--group", "G2", "--jobs", "1", "--output", "json"});
  const auto many = run({"verify-theorem", "--group", "G2", "--jobs", "6", "--output", "json"});
  EXPECT_EQ(one.out, many.out);
}

TEST(Cli, VerifyTheoremRejectsOversizedGroups) {
  const auto r = run({"verify-theorem", "--group", "E8"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("smaller rank"), std::string::npos);
}

TEST(Cli, SweepFromStdin) {
  const std::string tasks = R"([
    {"group":"A2","u":"perm:213","w":"perm:321","lambda":[1,1]},
    {"type":"B2","u":"id","w":"w0"},
    {"group":"A2","u":"perm:231","w":"perm:312"}
  ])";
  const auto r = run({"sweep", "--input", "-", "--jobs", "3", "--output", "json"}, tasks);
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 3u);
  EXPECT_EQ(j[0].at("text"), "x1*x2 + 1/2*x2^2");
  EXPECT_EQ(j[0].at("degree"), "3");
  EXPECT_EQ(j[1].at("chains"), 8);
  EXPECT_EQ(j[2].at("comparable"), false);

  const auto text = run({"sweep", "--input", "-", "--group", "A2"}, R"([{"u":"id","w":"w0"}])");
  EXPECT_EQ(text.code, 0);
  EXPECT_EQ(text.out, "0 A2 perm:123 perm:321: 1/2*x1^2*x2 + 1/2*x1*x2^2 chains=4\n");
}

TEST(Cli, UsageErrorsExitWithTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"ps", "--group", "A2", "--u", "perm:213"}).code, 2);
  EXPECT_EQ(run({"ps", "--group", "Q7", "--u", "id", "--w", "id"}).code, 2);
  EXPECT_EQ(run({"ps", "--group", "A2", "--u", "perm:11", "--w", "id"}).code, 2);
  EXPECT_EQ(run({"ps", "--group", "B2", "--u", "perm:21", "--w", "id"}).code, 2);
  EXPECT_EQ(run({"ps", "--group", "A2", "--u", "id", "--w", "id", "--output", "xml"}).code, 2);
  EXPECT_EQ(run({"lorentzian", "--poly", "{not json"}).code, 2);
  EXPECT_EQ(run({"lorentzian", "--poly", R"({"vars":2,"terms":[{"exp":[1]}]})"}).code, 2);
  EXPECT_EQ(run({"sweep", "--input", "-"}, R"({"nope":1})").code, 2);
  EXPECT_EQ(run({"sweep", "--input", "-"}, R"([{"u":"id","w":"id"}])").code, 2);
  EXPECT_EQ(run({"sweep", "--input", "/nonexistent/tasks.json"}).code, 2);
}

TEST(Cli, HelpExitsWithZero) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verify-theorem"), std::string::npos);
}
