#include <cstdlib>

#include "json.hpp"

#include "ggx/graph_io.hpp"
#include "ggx/power_graphs.hpp"
#include "ggx/tools/cli.hpp"
#include "support.hpp"

namespace ggx::tools {
namespace {

using nlohmann::json;

CommandResult run(std::vector<std::string> args) { return run_command(args); }

TEST(Cli, PerfectCheckA5) {
  const auto r = run({"perfect", "check", "--group", "A5"});
  EXPECT_EQ(r.exit_code, kExitOk) << r.err;
  const auto doc = json::parse(r.out);
  EXPECT_EQ(doc["group"], "A5");
  EXPECT_EQ(doc["status"], "perfect");
  EXPECT_TRUE(doc["witness"].is_null());
  EXPECT_EQ(doc["reductions"][0]["step"], "input");
  EXPECT_EQ(doc["reductions"][0]["vertices"], 60);
  EXPECT_TRUE(doc["budgetSpent"].is_number_integer());
}

TEST(Cli, PerfectCheckC30xC30) {
  const auto r = run({"perfect", "check", "--group", "C30xC30"});
  EXPECT_EQ(r.exit_code, kExitNegative);
  const auto doc = json::parse(r.out);
  EXPECT_EQ(doc["status"], "imperfect");
  EXPECT_EQ(doc["witness"]["kind"], "hole");
  EXPECT_EQ(doc["witness"]["labels"].size(), 5U);
  EXPECT_EQ(run({"perfect", "check", "--group", "C30xC30"}).out, r.out);
}

TEST(Cli, BudgetFlagAndEnvironment) {
  ::setenv("GGX_BUDGET", "1", 1);
  const auto env = run({"perfect", "check", "--group", "C30xC30"});
  EXPECT_EQ(env.exit_code, kExitLimit);
  EXPECT_EQ(json::parse(env.out)["status"], "unknown");
  const auto flag = run({"perfect", "check", "--group", "C30xC30", "--budget", "100000"});
  EXPECT_EQ(flag.exit_code, kExitNegative);
  ::setenv("GGX_BUDGET", "many", 1);
  EXPECT_EQ(run({"perfect", "check", "--group", "C6"}).exit_code, kExitUsage);
  ::unsetenv("GGX_BUDGET");
}

TEST(Cli, UsageErrors) {
  const auto r = run({"group", "info", "Z99"});
  EXPECT_EQ(r.exit_code, kExitUsage);
  EXPECT_NE(r.err.find("groups"), std::string::npos);
  EXPECT_EQ(run({}).exit_code, kExitUsage);
  EXPECT_EQ(run({"graph", "build", "--group", "S3", "--kind", "bogus"}).exit_code, kExitUsage);
  EXPECT_EQ(run({"graph", "build", "--group", "S3", "--dot", "--csv"}).exit_code, kExitUsage);
  EXPECT_EQ(run({"--help"}).exit_code, kExitOk);
}

TEST(Cli, CapsAreLimits) {
  const auto r = run({"graph", "build", "--group", "S9", "--kind", "power"});
  EXPECT_EQ(r.exit_code, kExitLimit);
}

TEST(Cli, GroupInfo) {
  const auto r = run({"group", "info", "Q8"});
  ASSERT_EQ(r.exit_code, kExitOk);
  const auto doc = json::parse(r.out);
  EXPECT_EQ(doc["order"], 8);
  EXPECT_EQ(doc["orderCensus"].size(), 3U);
  EXPECT_EQ(doc["sylow"][0]["unique"], true);
  EXPECT_EQ(doc["sylow"][0]["cyclic"], false);
}

TEST(Cli, GraphBuildFormats) {
  const auto csv = run({"graph", "build", "--group", "C3", "--kind", "enhanced", "--csv"});
  EXPECT_EQ(csv.out, "source,target\n0,1\n0,2\n1,2\n");
  const auto dot = run({"graph", "build", "--group", "C1", "--kind", "power", "--dot"});
  EXPECT_EQ(dot.out, "graph {\n  \"0\";\n}\n");
  const auto d = run({"graph", "build", "--group", "C3", "--kind", "dpower"});
  EXPECT_EQ(json::parse(d.out)["kind"], "digraph");
}

TEST(Cli, ReconstructRoundTrip) {
  const auto dir = std::filesystem::temp_directory_path();
  const auto power = (dir / "ggx_cli_power.json").string();
  const auto rebuilt = (dir / "ggx_cli_rebuilt.json").string();
  ASSERT_EQ(run({"graph", "build", "--group", "S4", "--kind", "power", "--out", power}).exit_code, kExitOk);
  ASSERT_EQ(run({"reconstruct", "enhanced", "--in", power, "--out", rebuilt}).exit_code, kExitOk);
  const auto enhanced = run({"graph", "build", "--group", "S4", "--kind", "enhanced"});
  EXPECT_EQ(read_text_file(rebuilt), enhanced.out);

  const auto directed = run({"reconstruct", "directed", "--in", power});
  ASSERT_EQ(directed.exit_code, kExitOk) << directed.err;
  EXPECT_EQ(json::parse(directed.out)["kind"], "digraph");

  const auto quotient = run({"graph", "quotient", power});
  ASSERT_EQ(quotient.exit_code, kExitOk);
  EXPECT_LT(json::parse(quotient.out)["labels"].size(), 24U);

  const auto c6 = (dir / "ggx_cli_c6.json").string();
  run({"graph", "build", "--group", "C6", "--kind", "power", "--out", c6});
  const auto unsupported = run({"reconstruct", "directed", "--in", c6});
  EXPECT_EQ(unsupported.exit_code, kExitUsage);
  EXPECT_NE(unsupported.err.find("UnsupportedCenterCase"), std::string::npos);
  EXPECT_EQ(run({"reconstruct", "enhanced", "--in", "/nonexistent.json"}).exit_code, kExitUsage);
}

TEST(Cli, Classes) {
  const auto r = run({"classes", "--group", "D4"});
  ASSERT_EQ(r.exit_code, kExitOk);
  const auto doc = json::parse(r.out);
  EXPECT_EQ(doc["equiv"].size(), 6U);
  bool complex_seen = false;
  for (const auto& c : doc["equiv"]) {
    if (c["type"].is_object()) {
      complex_seen = true;
      EXPECT_EQ(c["type"]["complex"]["p"], 2);
      EXPECT_EQ(c["members"], json({"r", "r^2", "r^3"}));
    }
  }
  EXPECT_TRUE(complex_seen);
  const auto q8 = json::parse(run({"classes", "--group", "Q8"}).out);
  EXPECT_TRUE(q8["equiv"][0]["type"].is_null());
}

TEST(Cli, WitnessCheck) {
  const auto ok = run({"witness", "check", "--group", "S8", "--cycle", "(1 2 3 4 5);(6 7 8);(1 2);(3 4 5);(6 7)"});
  EXPECT_EQ(ok.exit_code, kExitOk);
  EXPECT_EQ(json::parse(ok.out)["valid"], true);
  const auto short_cycle = run({"witness", "check", "--group", "S8", "--cycle", "(1 2 3 4 5);(6 7 8);(1 2)"});
  EXPECT_EQ(short_cycle.exit_code, kExitNegative);
  EXPECT_EQ(run({"witness", "check", "--group", "S8", "--cycle", "(1 9)"}).exit_code, kExitUsage);
}

TEST(Cli, VerifySuite) {
  const auto corpus = test::temp_file("corpus.txt", "# small\nS3\nD4\nC6\n");
  const auto r = run({"verify", "--suite", "reconstruction", "--corpus", corpus.string()});
  EXPECT_EQ(r.exit_code, kExitOk) << r.out << r.err;
  const auto doc = json::parse(r.out);
  EXPECT_EQ(doc["pass"], true);
  EXPECT_EQ(doc["criteria"].size(), 4U);
  EXPECT_EQ(run({"verify", "--suite", "nonsense"}).exit_code, kExitUsage);
}

}  // namespace
}  // namespace ggx::tools
