#include <gtest/gtest.h>

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "scomult/cli.hpp"

using namespace scomult;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(SCOMULT_TEST_DATA) + "/" + name; }

std::size_t lines(const std::string& text) {
  return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

}  // namespace

TEST(CliCheck, SComultiplicationWithWitnesses) {
  const auto r = run({"check", data("z6_self.inst"), "s-comultiplication", "--mcs", "{1}"});
  EXPECT_EQ(r.code, cli::kTrue) << r.err;
  EXPECT_NE(r.out.find("{0, 3}: s = 1"), std::string::npos) << r.out;
}

TEST(CliCheck, FailingSubmoduleIsPrinted) {
  const auto r = run({"check", data("v2_over_f2.inst"), "comultiplication"});
  EXPECT_EQ(r.code, cli::kFalse);
  EXPECT_NE(r.out.find("failing submodule"), std::string::npos) << r.out;
}

TEST(CliCheck, ParseErrorsAreInputErrors) {
  const auto r = run({"check", data("bad.inst"), "s-comultiplication"});
  EXPECT_EQ(r.code, cli::kInputError);
  EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
  EXPECT_EQ(run({"check", data("z6_self.inst"), "no-such-predicate"}).code, cli::kInputError);
  EXPECT_EQ(run({"check", data("z6_self.inst"), "s-comultiplication", "--mcs", "{0,1}"}).code, cli::kInputError);
  EXPECT_EQ(run({"check", data("z6_self.inst"), "s-prime", "--submodule", "{0,1}"}).code, cli::kInputError);
}

TEST(CliCheck, DisjointnessIsAPreconditionFailure) {
  // ({0,3} : Z6) = {0,3} contains 3
  const auto r = run({"check", data("z6_self.inst"), "s-prime", "--submodule", "{0,3}", "--mcs", "{1,3}"});
  EXPECT_EQ(r.code, cli::kPrecondition) << r.out << r.err;
  EXPECT_EQ(run({"check", data("z6_self.inst"), "s-second", "--submodule", "{0}"}).code, cli::kPrecondition);
}

TEST(CliCheck, EveryPredicateRunsOnZ6) {
  for (const auto& p : cli::predicate_names()) {
    const auto r = run({"check", data("z6_self.inst"), p, "--submodule", "{0,3}", "--ideal", "{0,3}", "--mcs",
                        "{1,5}"});
    if (p == "s-zero" || p == "s-monic" || p == "s-epic") {
      EXPECT_EQ(r.code, cli::kInputError) << p;  // no hom in the file
      continue;
    }
    EXPECT_TRUE(r.code == cli::kTrue || r.code == cli::kFalse) << p << ": " << r.err;
  }
}

TEST(CliEnumerate, Z6Listings) {
  const auto ideals = run({"enumerate", data("z6.inst"), "ideals"});
  EXPECT_EQ(ideals.code, cli::kTrue);
  EXPECT_EQ(lines(ideals.out), 4u);
  const auto mcs = run({"enumerate", data("z6.inst"), "mcs"});
  EXPECT_EQ(lines(mcs.out), 7u);
  EXPECT_EQ(lines(run({"enumerate", data("f5.inst"), "ideals"}).out), 2u);
  EXPECT_EQ(lines(run({"enumerate", data("z6_self.inst"), "submodules"}).out), 4u);
  EXPECT_EQ(run({"enumerate", data("z6.inst"), "elephants"}).code, cli::kInputError);
  EXPECT_EQ(run({"enumerate", data("bad.inst"), "ideals"}).code, cli::kInputError);
}

TEST(CliVerify, FilteredRunWritesReport) {
  const std::string path = ::testing::TempDir() + "scomult_report.json";
  const auto r = run({"verify", "--statements", "T-DU,L-EQ", "--max-ring", "6", "--report", path});
  EXPECT_EQ(r.code, cli::kTrue) << r.err;
  std::ifstream in(path);
  const auto doc = nlohmann::json::parse(in);
  ASSERT_EQ(doc["statements"].size(), 2u);
  EXPECT_EQ(doc["statements"][0]["id"], "L-EQ");
  EXPECT_EQ(doc["statements"][1]["verdict"], "vacuous");
  EXPECT_TRUE(doc["run"]["timestamp"].is_string());
  EXPECT_EQ(doc["run"]["params"]["max_ring"], 6);
}

TEST(CliVerify, OnlyVacuousIsNotAPass) {
  EXPECT_EQ(run({"verify", "--statements", "T-DU,C-DU", "--max-ring", "6"}).code, cli::kFalse);
}

TEST(CliVerify, MutantRunFails) {
  const auto r = run({"verify", "--mutant", "lemma-iii-flipped", "--statements", "L-EQ", "--max-ring", "6"});
  EXPECT_EQ(r.code, cli::kFalse);
}

TEST(CliVerify, BadFlagsAreInputErrors) {
  EXPECT_EQ(run({"verify", "--max-ring", "0"}).code, cli::kInputError);
  EXPECT_EQ(run({"verify", "--statements", "NOPE"}).code, cli::kInputError);
  EXPECT_EQ(run({"verify", "--mutant", "nope"}).code, cli::kInputError);
  EXPECT_EQ(run({"verify", "--frobnicate"}).code, cli::kInputError);
  EXPECT_EQ(run({}).code, cli::kInputError);
}
