#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "cli.hpp"

namespace schmidt::cli {
namespace {

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string trim(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
  return s;
}

TEST(Bijection, MorkExample) {
  const auto r = call({"bijection", "mork", "--input", "[7,5,4,4,2,1]"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_EQ(trim(r.out), "[12,10,7,5,3,2,1]");
  EXPECT_TRUE(r.err.empty());
}

TEST(Bijection, MorkPipesIntoInverse) {
  for (const std::string input :
       {"[]", "[1]", "[7,5,4,4,2,1]", "[3,3,3]", "[9,1,1,1,1]", "[6,5,5,2]"}) {
    const auto forward = call({"bijection", "mork", "--input", input});
    ASSERT_EQ(forward.code, kExitPass) << input << forward.err;
    const auto back =
        call({"bijection", "mork", "--input", trim(forward.out), "--inverse"});
    ASSERT_EQ(back.code, kExitPass) << input << back.err;
    EXPECT_EQ(trim(back.out), input);
  }
}

TEST(Bijection, OtherMaps) {
  EXPECT_EQ(trim(call({"bijection", "bessenrodt", "--input", "[3,3,1]"}).out),
            "[4,2,1]");
  EXPECT_EQ(trim(call({"bijection", "bessenrodt", "--input", "[4,2,1]",
                       "--inverse"})
                     .out),
            "[3,3,1]");
  const auto cc = call({"bijection", "color-conjugate", "--input",
                        "[9,7,6,5,4,4,4,4,3,2,1]", "--t", "3", "--r", "4"});
  ASSERT_EQ(cc.code, kExitPass);
  const auto j = nlohmann::json::parse(cc.out);
  EXPECT_EQ(j["nu"], nlohmann::json::parse("[4,2,1]"));
  EXPECT_EQ(j["mu"], nlohmann::json::parse("[[3,2],[3,1],[2,3],[2,2],[1,1]]"));
  const auto back = call({"bijection", "color-conjugate", "--input",
                          trim(cc.out), "--t", "3", "--r", "4", "--inverse"});
  EXPECT_EQ(trim(back.out), "[9,7,6,5,4,4,4,4,3,2,1]");
  const auto hook = call({"bijection", "hook-map", "--input",
                          R"({"m":3,"rows":[[2,2],[1,3],[1,3]]})"});
  ASSERT_EQ(hook.code, kExitPass) << hook.err;
  EXPECT_EQ(nlohmann::json::parse(hook.out)["parts"],
            nlohmann::json::parse("[4,4,3]"));
}

TEST(Bijection, BadInputIsUsageError) {
  for (const std::vector<std::string>& args : {
           std::vector<std::string>{"bijection", "mork", "--input", "[1,2]"},
           {"bijection", "mork", "--input", "not json"},
           {"bijection", "mork", "--input", "[1.5]"},
           {"bijection", "mork"},
           {"bijection", "frobnicate", "--input", "[1]"},
           {"bijection", "bessenrodt", "--input", "[2]"},
           {"bijection", "hook-map", "--input", "[2]", "--inverse"},
       }) {
    const auto r = call(args);
    EXPECT_EQ(r.code, kExitUsage) << args.back();
    EXPECT_TRUE(r.out.empty());
    EXPECT_FALSE(r.err.empty());
  }
}

TEST(Usage, UnknownCommandsAndFlags) {
  EXPECT_EQ(call({}).code, kExitUsage);
  EXPECT_EQ(call({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(call({"verify", "thm3.1", "--bogus"}).code, kExitUsage);
  EXPECT_EQ(call({"verify", "thm99"}).code, kExitUsage);
  EXPECT_EQ(call({"verify", "thm3.1", "--max-q", "-1"}).code, kExitUsage);
  EXPECT_EQ(call({"suite", "--level", "huge"}).code, kExitUsage);
  EXPECT_EQ(call({"table", "other"}).code, kExitUsage);
  EXPECT_EQ(call({"verify", "cor10", "--t", "1"}).code, kExitUsage);
}

TEST(Table, BessenrodtRows) {
  const auto r = call({"table", "bessenrodt", "--n", "7"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_EQ(r.out,
            "weight\tdistinct\todd\n"
            "7\t(7)\t(1,1,1,1,1,1,1)\n"
            "6\t(6,1)\t(3,1,1,1,1)\n"
            "5\t(5,2)\t(5,1,1)\n"
            "5\t(4,2,1)\t(3,3,1)\n"
            "4\t(4,3)\t(7)\n");
}

TEST(Verify, DistinctOddWeightPasses) {
  const auto r = call({"verify", "thm3.1", "--max-q", "12", "--max-z", "24"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_NE(r.out.find("pass"), std::string::npos);
}

TEST(Verify, InjectedFaultFails) {
  const auto r = call({"verify", "thm5.1", "--inject-fault", "--json"});
  EXPECT_EQ(r.code, kExitFail);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["status"], "fail");
  EXPECT_EQ(j["first_mismatch"]["monomial"], nlohmann::json::parse(R"({"q":5,"z":0})"));
  EXPECT_EQ(j["first_mismatch"]["lhs"], 0);
  EXPECT_EQ(j["first_mismatch"]["rhs"], 1);
}

TEST(Verify, JsonReportShape) {
  const auto r = call({"verify", "thm9", "--t", "2", "--r", "2", "--json"});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["id"], "thm9");
  EXPECT_EQ(j["params"], nlohmann::json::parse(R"({"t":2,"r":2})"));
  EXPECT_EQ(j["box"], nlohmann::json::parse(R"({"q":10,"s":10,"z":10})"));
  EXPECT_EQ(j["status"], "pass");
  EXPECT_EQ(j["coefficients_checked"], 1331);
  EXPECT_FALSE(j.contains("elapsed_ms"));
  const auto timed =
      call({"verify", "thm9", "--t", "2", "--r", "2", "--json", "--timing"});
  EXPECT_TRUE(nlohmann::json::parse(timed.out).contains("elapsed_ms"));
}

TEST(Verify, EveryIdRunsWithDefaults) {
  for (const char* id :
       {"thm1", "schmidt", "prop1", "cor2", "thm3.1", "thm3.2", "eq3", "thm4.1",
        "thm4.2", "thm5.1", "thm5.2", "thm6", "thm7", "thm8.1", "thm8.2",
        "thm9", "cor10", "cor11", "eq14", "eq20", "eq24", "table1",
        "furtherwork"}) {
    const auto r = call({"verify", id, "--json"});
    EXPECT_EQ(r.code, kExitPass) << id << r.err;
    EXPECT_TRUE(nlohmann::json::accept(r.out)) << id;
  }
}

TEST(Series, PrintsClosedForm) {
  const auto r = call({"series", "thm5.1", "--max-q", "2", "--max-z", "2"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_EQ(trim(r.out), "1 + 2*q*z + 2*q^2*z + 3*q^2*z^2");
  const auto j =
      call({"series", "thm5.1", "--max-q", "1", "--max-z", "1", "--json"});
  EXPECT_EQ(nlohmann::json::parse(j.out)["box"],
            nlohmann::json::parse(R"({"q":1,"z":1})"));
}

TEST(Suite, JsonIsByteStableAcrossRunsAndThreads) {
  const auto a = call({"suite", "--level", "quick", "--json"});
  const auto b = call({"suite", "--level", "quick", "--json"});
  const auto c = call({"suite", "--level", "quick", "--json", "--threads", "4"});
  EXPECT_EQ(a.code, kExitPass);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, c.out);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["status"], "pass");
  EXPECT_EQ(j["failed"], 0);
}

TEST(Suite, FaultNamesTheVerifier) {
  const auto r = call({"suite", "--fault", "eq20", "--json"});
  EXPECT_EQ(r.code, kExitFail);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["status"], "fail");
  for (const auto& report : j["reports"]) {
    EXPECT_EQ(report["status"] == "fail", report["id"] == "eq20");
  }
}

}  // namespace
}  // namespace schmidt::cli
