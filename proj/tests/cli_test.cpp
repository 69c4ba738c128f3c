#include "blbetti/cli.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <fstream>
#include <sstream>

namespace blbetti {
namespace {

const std::string kGraphs = std::string(BLBETTI_DATA_DIR) + "/graphs/";

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "blbetti");
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_graph(const std::string& name, const std::string& text) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << text;
  return path;
}

TEST(CliTest, BsTheta) {
  const Result r = run_cli({"bs", kGraphs + "theta332.graph"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out, "c_7 = 1/8\nc_8 = 47/72\nc_9 = 2/9\n");
}

TEST(CliTest, BettiBothTheta) {
  const Result r = run_cli({"betti", kGraphs + "theta332.graph", "--method", "both"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out,
            "omega[closed] = (37,177,413,581,525,307,112,23,2,0,0,0,0,0)\n"
            "omega[oracle] = (37,177,413,581,525,307,112,23,2,0,0,0,0,0)\n"
            "MATCH\n");
}

TEST(CliTest, EveryBothRunMatches) {
  for (const char* file : {"theta332", "c4", "c6", "two_triangles", "p4", "star3"}) {
    for (const char* cmd : {"betti", "bs", "alhc"}) {
      for (bool complement : {false, true}) {
        std::vector<std::string> args{cmd, kGraphs + file + ".graph", "--method", "both"};
        if (complement) args.push_back("--complement");
        const Result r = run_cli(args);
        ASSERT_EQ(r.code, cli::kOk) << cmd << " " << file << " " << r.err;
        ASSERT_NE(r.out.find("MATCH\n"), std::string::npos);
        ASSERT_EQ(r.out.find("MISMATCH"), std::string::npos);
      }
    }
  }
}

TEST(CliTest, Compare) {
  const Result same = run_cli({"compare", kGraphs + "c6.graph", kGraphs + "two_triangles.graph"});
  EXPECT_EQ(same.code, cli::kOk);
  EXPECT_EQ(same.out.substr(0, same.out.find('\n')), "INDISTINGUISHABLE_BY_BL_BETTI");
  const Result diff = run_cli({"compare", kGraphs + "p4.graph", kGraphs + "star3.graph"});
  EXPECT_EQ(diff.code, cli::kOk);
  EXPECT_EQ(diff.out.substr(0, diff.out.find('\n')), "DISTINGUISHED");
}

TEST(CliTest, BlOutputIsAGraphFile) {
  const Result r = run_cli({"bl", kGraphs + "p4.graph", "--complement"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "7 9");
  const Result full = run_cli({"bl", kGraphs + "p4.graph"});
  EXPECT_EQ(full.out.substr(0, full.out.find('\n')), "7 12");
}

TEST(CliTest, BsWarnsAtRelaxedHypothesis) {
  const Result r = run_cli({"bs", kGraphs + "star3.graph"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.err.find("warning"), std::string::npos);
}

TEST(CliTest, JsonRoundTripsByteIdentically) {
  const std::vector<std::vector<std::string>> commands{
      {"--format", "json", "betti", kGraphs + "theta332.graph", "--method", "both"},
      {"--format", "json", "bs", kGraphs + "theta332.graph"},
      {"--format", "json", "alhc", kGraphs + "c4.graph", "--complement"},
      {"--format", "json", "compare", kGraphs + "c6.graph", kGraphs + "two_triangles.graph"},
      {"--format", "json", "bl", kGraphs + "p4.graph"},
      {"--format", "json", "verify", "--max-n", "3"},
  };
  for (const auto& args : commands) {
    const Result r = run_cli(args);
    ASSERT_EQ(r.code, cli::kOk) << r.err;
    const auto doc = nlohmann::ordered_json::parse(r.out);
    ASSERT_EQ(doc.dump(2) + "\n", r.out);
  }
}

TEST(CliTest, JsonSchema) {
  const Result r = run_cli({"--format", "json", "bs", kGraphs + "c4.graph"});
  const auto doc = nlohmann::ordered_json::parse(r.out);
  EXPECT_EQ(doc["n"], "4");
  EXPECT_EQ(doc["m"], "4");
  ASSERT_EQ(doc["coeffs"].size(), 7u);
  EXPECT_EQ(doc["coeffs"][4]["j"], "5");
  EXPECT_EQ(doc["coeffs"][4]["num"], "4");
  EXPECT_EQ(doc["coeffs"][4]["den"], "5");
}

TEST(CliTest, TsvBetti) {
  const Result r = run_cli({"--format", "tsv", "betti", kGraphs + "c4.graph"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out, "i\tbeta\n1\t14\n2\t36\n3\t39\n4\t20\n5\t4\n6\t0\n7\t0\n");
}

TEST(CliTest, ExitCodes) {
  EXPECT_EQ(run_cli({}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"betti", kGraphs + "c4.graph", "--method", "guess"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"verify", "--max-n", "9"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"--help"}).code, cli::kOk);

  EXPECT_EQ(run_cli({"betti", kGraphs + "missing.graph"}).code, cli::kParse);
  EXPECT_EQ(run_cli({"betti", temp_graph("bad.graph", "3 2\n0 1\n")}).code, cli::kParse);
  EXPECT_EQ(run_cli({"betti", kGraphs + "pineapple_8_4.graph"}).code, cli::kParse);

  const Result guard = run_cli({"bs", kGraphs + "p4.graph", "--complement"});
  EXPECT_EQ(guard.code, cli::kOk);
  const Result small = run_cli({"bs", temp_graph("k2.graph", "2 1\n0 1\n"), "--complement"});
  EXPECT_EQ(small.code, cli::kApplicability);
  EXPECT_NE(small.err.find("n >= 3"), std::string::npos);
  const Result sparse = run_cli({"alhc", temp_graph("sparse.graph", "5 1\n0 1\n")});
  EXPECT_EQ(sparse.code, cli::kApplicability);
  EXPECT_NE(sparse.err.find("m >= n-1"), std::string::npos);
  EXPECT_EQ(run_cli({"alhc", temp_graph("sparse2.graph", "5 1\n0 1\n"), "--method", "matrix"}).code, cli::kOk);
  const Result big = run_cli({"betti", temp_graph("big.graph", "25 0\n"), "--method", "oracle"});
  EXPECT_EQ(big.code, cli::kApplicability);
}

TEST(CliTest, Multigraph) {
  const Result closed = run_cli({"--multigraph", "betti", kGraphs + "pineapple_8_4.graph", "--complement",
                                 "--method", "both"});
  EXPECT_EQ(closed.code, cli::kOk);
  EXPECT_NE(closed.out.find("omega[closed] = (30,140,335,504,504,336,144,36,4,0,0)"), std::string::npos);
  EXPECT_EQ(run_cli({"--multigraph", "bs", kGraphs + "pineapple_8_4.graph"}).code, cli::kApplicability);
  const Result lambda = run_cli({"--multigraph", "alhc", kGraphs + "pineapple_8_4.graph", "--complement"});
  EXPECT_EQ(lambda.out, "lambda = (1,2,3,4,4,4,4,4,4,0,0)\n");
}

TEST(CliTest, VerifySmall) {
  const Result r = run_cli({"verify", "--max-n", "4"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("verify: 8/8 checks passed"), std::string::npos);
}

}  // namespace
}  // namespace blbetti
