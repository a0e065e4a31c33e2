#include <gtest/gtest.h>

#include <sstream>

#include <json.hpp>

#include "quadcount/cli/cli.hpp"
#include "quadcount/cli/verify.hpp"

using namespace quadcount;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Parse, Elements) {
  FieldCtx F3(3, 1);
  EXPECT_EQ(cli::parse_element(F3, "2"), F3.from_int(2));
  EXPECT_EQ(cli::parse_element(F3, "-1"), F3.from_int(2));
  EXPECT_EQ(cli::parse_element(F3, "[1]"), F3.one());
  FieldCtx F9(3, 2);
  const FqElem u = cli::parse_element(F9, "[0 1]");
  EXPECT_EQ(F9.coeffs(u), (std::vector<std::uint32_t>{0, 1}));
  EXPECT_EQ(cli::parse_element(F9, "[2 1]").index(), 2u + 3u);
  const auto list = cli::parse_element_list(F9, "1,[0 1],[1 2]");
  ASSERT_EQ(list.size(), 3u);
  EXPECT_EQ(list[1], u);
  EXPECT_THROW((void)cli::parse_element(F9, "[1 2 0]"), std::invalid_argument);
  EXPECT_THROW((void)cli::parse_element(F3, "x"), std::invalid_argument);
  EXPECT_THROW((void)cli::parse_element_list(F9, "1,[1,2]"), std::invalid_argument);
}

TEST(Parse, GramAndRange) {
  FieldCtx F(3, 1);
  const auto g = cli::parse_gram(F, "0,1;1,0");
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g[0][1], F.one());
  EXPECT_TRUE(g[0][0].is_zero());
  EXPECT_EQ(cli::parse_p_range("1..4"), std::make_pair(1u, 4u));
  EXPECT_EQ(cli::parse_p_range("3..2"), std::make_pair(3u, 2u));
  EXPECT_THROW((void)cli::parse_p_range("1-4"), std::invalid_argument);
}

TEST(Cli, CountExactAndBrute) {
  const auto r = run({"count", "--p", "3", "--nu", "1", "--coeffs", "1,1,1", "--P", "2", "--method", "exact,brute"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["command"], "count");
  const auto& reports = j["data"]["reports"];
  ASSERT_EQ(reports.size(), 2u);
  EXPECT_EQ(reports[0]["value"], 33);
  EXPECT_EQ(reports[0]["method"], "exact_formula");
  EXPECT_EQ(reports[1]["value"], 33);
  EXPECT_EQ(reports[1]["method"], "brute_force");
  EXPECT_TRUE(j["metadata"].contains("runtime_ms"));
}

TEST(Cli, CountNonSplit) {
  const auto r = run({"count", "--p", "3", "--coeffs", "1,1,1,2", "--P", "1", "--method", "exact"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["data"]["reports"][0]["value"], 21);
  EXPECT_EQ(json::parse(r.out)["data"]["form"]["case"], "NonSplitEven");
}

TEST(Cli, CountQuantities) {
  auto r = run({"count", "--q", "3", "--coeffs", "1,1,1", "--P", "2", "--quantity", "mor", "--method", "exact,brute"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(j["data"]["reports"][0]["value"], 24);
  EXPECT_EQ(j["data"]["reports"][1]["value"], 24);
  r = run({"count", "--q", "3", "--coeffs", "1,1,1,1", "--P", "1", "--quantity", "primitive"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["data"]["reports"][0]["value"], 16);
}

TEST(Cli, ExtensionFieldAndGram) {
  auto r = run({"count", "--p", "3", "--nu", "2", "--coeffs", "1,1,1", "--P", "1", "--method", "exact,circle,brute,convolution"});
  ASSERT_EQ(r.code, 0) << r.err;
  for (const auto& rep : json::parse(r.out)["data"]["reports"]) EXPECT_EQ(rep["value"], 81);
  r = run({"count", "--p", "3", "--gram", "0,1;1,0", "--P", "2", "--method", "brute,circle"});
  ASSERT_EQ(r.code, 0) << r.err;
  for (const auto& rep : json::parse(r.out)["data"]["reports"]) EXPECT_EQ(rep["value"], 17);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"count", "--p", "2", "--coeffs", "1,1,1", "--P", "1"}).code, 2);
  EXPECT_EQ(run({"count", "--p", "9", "--coeffs", "1,1,1", "--P", "1"}).code, 2);
  EXPECT_EQ(run({"count", "--p", "3", "--coeffs", "1,0,1", "--P", "1"}).code, 2);
  EXPECT_EQ(run({"count", "--p", "3", "--coeffs", "1,1", "--P", "1", "--method", "exact"}).code, 2);
  EXPECT_EQ(run({"count", "--p", "3", "--coeffs", "1,1,1,1", "--P", "3", "--method", "brute", "--budget", "100"}).code, 3);
  EXPECT_EQ(run({"verify", "nosuch"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"count", "--p", "3", "--coeffs", "1,1,1", "--P", "1", "--modulus", "1,1"}).code, 0);
  EXPECT_EQ(run({"count", "--p", "3", "--nu", "2", "--coeffs", "1,1,1", "--P", "1", "--modulus", "2,0,1"}).code, 2);
}

TEST(Cli, Table) {
  auto r = run({"table", "--p", "3", "--coeffs", "1,1,1", "--P-range", "1..4"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json rows = json::parse(r.out)["data"]["rows"];
  ASSERT_EQ(rows.size(), 4u);
  std::vector<int> mor;
  for (const auto& row : rows) mor.push_back(row["mor"].get<int>());
  EXPECT_EQ(mor, (std::vector<int>{0, 24, 0, 216}));

  r = run({"table", "--p", "3", "--coeffs", "1,1,1,2", "--P-range", "1..2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["data"]["rows"][1]["mor"], 720);

  r = run({"table", "--p", "3", "--coeffs", "1,1,1", "--P-range", "3..2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(json::parse(r.out)["data"]["rows"].empty());

  r = run({"table", "--p", "3", "--coeffs", "1,1,1", "--P-range", "1..2", "--emit", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "P,method,N,primitive,mor\n1,exact_formula,9,4,0\n2,exact_formula,33,4,24\n");
}

TEST(Cli, TableIsDeterministic) {
  const std::vector<std::string> base{"table", "--p", "3", "--coeffs", "1,2,1", "--P-range", "0..3", "--method",
                                      "exact,circle,brute,convolution"};
  auto with_jobs = [&](const char* jobs) {
    auto args = base;
    args.insert(args.end(), {"--jobs", jobs});
    const auto r = run(args);
    EXPECT_EQ(r.code, 0) << r.err;
    return json::parse(r.out)["data"].dump();
  };
  const std::string ref = with_jobs("1");
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(with_jobs("1"), ref);
    EXPECT_EQ(with_jobs("4"), ref);
  }
}

TEST(Cli, Verify) {
  auto r = run({"verify", "gauss", "--q", "3", "--maxdeg", "2", "--maxk", "3"});
  ASSERT_EQ(r.code, 0) << r.out;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["data"]["failed"], 0);
  EXPECT_GT(j["data"]["passed"].get<int>(), 0);
  EXPECT_EQ(run({"verify", "lemma32", "--q", "3", "--pmax", "2", "--n", "3"}).code, 0);
  EXPECT_EQ(run({"verify", "counts", "--q", "3", "--nmax", "4", "--pmax", "2"}).code, 0);
}

TEST(Verify, AllSuitesPassOnSmallBounds) {
  FieldCtx F(3, 1);
  cli::VerifyBounds b;
  b.maxdeg = 1;
  b.maxk = 2;
  b.nmax = 3;
  b.pmax = 1;
  for (const auto& suite : cli::suite_names()) {
    const auto checks = cli::run_suite(suite, F, b);
    EXPECT_FALSE(checks.empty()) << suite;
    for (const auto& c : checks) EXPECT_TRUE(c.pass) << suite << ": " << c.name << " " << c.params << " " << c.lhs << " vs " << c.rhs;
  }
  EXPECT_THROW((void)cli::run_suite("nosuch", F, b), cli::UnknownSuite);
}
