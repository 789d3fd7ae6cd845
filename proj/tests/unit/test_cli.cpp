#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "chase/game_io.hpp"
#include "chase/graph_stream.hpp"
#include "chase_cli/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = chase::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("chase_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name), std::ios::binary) << text;
    return path(name);
  }

  fs::path dir_;
};

const fs::path kGolden = CHASE_GOLDEN_DIR;

}  // namespace

TEST_F(CliTest, SeededGadgetsMatchGoldens) {
  for (const std::string gadget : {"distance", "reach", "matching"}) {
    const auto r = run({"gen-graph", "--gadget", gadget, "--k", "4", "--p", "1", "--seed", "5"});
    ASSERT_EQ(r.code, chase::cli::kPass) << r.err;
    EXPECT_EQ(r.out, slurp(kGolden / (gadget + "_k4_p1_seed5.txt"))) << gadget;
  }
  const auto ident = run({"gen-graph", "--gadget", "distance", "--identity", "--k", "4", "--p", "1"});
  EXPECT_EQ(ident.out, slurp(kGolden / "distance_identity_k4_p1.txt"));
  const auto game = run({"gen-game", "--seed", "11", "--kind", "orlpce", "--n", "8", "--p", "2", "--t", "2"});
  EXPECT_EQ(game.out, slurp(kGolden / "orlpce_n8_p2_t2_seed11.txt"));
}

TEST_F(CliTest, RerunsAreByteIdentical) {
  const std::vector<std::vector<std::string>> commands{
      {"gen-game", "--seed", "3", "--kind", "intersectsc", "--n", "6", "--p", "3"},
      {"gen-game", "--seed", "3", "--kind", "sc", "--n", "6", "--p", "3", "--density", "0.4"},
      {"gen-graph", "--gadget", "matching", "--k", "8", "--p", "3", "--seed", "9"},
      {"verify", "--seed", "5", "--suite", "protocols", "--trials", "0.1"},
  };
  for (const auto& command : commands) {
    const auto a = run(command);
    const auto b = run(command);
    EXPECT_EQ(a.code, chase::cli::kPass) << a.err;
    EXPECT_EQ(a.out, b.out);
    EXPECT_FALSE(a.out.empty());
  }
  const auto other = run({"gen-game", "--seed", "4", "--kind", "intersectsc", "--n", "6", "--p", "3"});
  EXPECT_NE(other.out, run(commands[0]).out);
}

TEST_F(CliTest, PipelineFromGameToStream) {
  const auto game = path("game.txt");
  ASSERT_EQ(run({"gen-game", "--seed", "1", "--kind", "orlpce", "--n", "16", "--p", "1", "--t", "1",
                 "--output", game})
                .code,
            chase::cli::kPass);
  const auto reduced = path("reduced.txt");
  const auto report = run({"reduce", "--seed", "2", "--input", game, "--output", reduced, "--report", "-",
                           "--allow-infeasible"});
  ASSERT_EQ(report.code, chase::cli::kPass) << report.err;
  EXPECT_EQ(report.out.rfind("short_circuited,n,p,r,t,feasible,bound,answer\n", 0), 0U);
  if (!fs::exists(reduced)) GTEST_SKIP() << "instance short-circuited";

  const auto solved = run({"solve-protocol", "--input", reduced, "--alg", "reverse"});
  ASSERT_EQ(solved.code, chase::cli::kPass) << solved.err;
  EXPECT_EQ(solved.out.rfind("protocol,answer,rounds,total_bits\nreverse,", 0), 0U);

  const auto graph = path("graph.txt");
  ASSERT_EQ(run({"gen-graph", "--gadget", "distance", "--input", reduced, "--output", graph}).code,
            chase::cli::kPass);
  const auto g = chase::parse_stream(slurp(graph));
  EXPECT_EQ(chase::serialize_stream(g), slurp(graph));
  const auto streamed = run({"stream-run", "--alg", "bidir-bfs", "--passes", "10", "--input", graph});
  ASSERT_EQ(streamed.code, chase::cli::kPass);
  EXPECT_EQ(streamed.out.substr(0, 34), "answer,passes_used,max_state_bits\n");
}

TEST_F(CliTest, StreamRunReportsPassesAndUndecided) {
  const auto graph = path("id.txt");
  ASSERT_EQ(run({"gen-graph", "--gadget", "distance", "--identity", "--k", "4", "--p", "1", "--output", graph})
                .code,
            chase::cli::kPass);
  EXPECT_EQ(run({"stream-run", "--alg", "bidir-bfs", "--passes", "5", "--input", graph}).out,
            "answer,passes_used,max_state_bits\n1,2,40\n");
  EXPECT_EQ(run({"stream-run", "--alg", "union-find", "--passes", "5", "--input", graph}).out,
            "answer,passes_used,max_state_bits\n1,1,100\n");
  EXPECT_EQ(run({"stream-run", "--alg", "bidir-bfs", "--passes", "1", "--input", graph}).out,
            "answer,passes_used,max_state_bits\nundecided,1,40\n");
}

TEST_F(CliTest, ProtocolDumpRoundTrips) {
  const auto inst = path("inst.txt");
  ASSERT_EQ(run({"gen-game", "--seed", "8", "--kind", "intersectsc", "--n", "4", "--p", "2", "--output", inst})
                .code,
            chase::cli::kPass);
  const auto dump = path("dump.txt");
  const auto r = run({"solve-protocol", "--input", inst, "--alg", "forward", "--dump", dump});
  ASSERT_EQ(r.code, chase::cli::kPass) << r.err;
  // p = 2, n = 4: 2 rounds, 16 set bits and 4 one-bit placeholders.
  EXPECT_NE(r.out.find(",2,20\n"), std::string::npos) << r.out;
  EXPECT_FALSE(slurp(dump).empty());
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(run({}).code, chase::cli::kUsage);
  EXPECT_EQ(run({"--help"}).code, chase::cli::kPass);
  EXPECT_EQ(run({"gen-game", "--n", "4", "--p", "1"}).code, chase::cli::kUsage);
  EXPECT_EQ(run({"gen-graph", "--gadget", "star", "--k", "2", "--p", "1", "--identity"}).code,
            chase::cli::kUsage);
  EXPECT_EQ(run({"stream-run", "--alg", "dfs", "--passes", "1", "--input", path("missing")}).code,
            chase::cli::kUsage);
  EXPECT_EQ(run({"verify", "--seed", "1", "--suite", "nope"}).code, chase::cli::kUsage);
  // One desk instance cannot show both answers.
  const auto starved = run({"verify", "--seed", "7", "--suite", "gadgets", "--trials", "1e-9"});
  EXPECT_EQ(starved.code, chase::cli::kCheckFailed);
  EXPECT_NE(starved.err.find("FAIL gadgets/desk_yes_fraction"), std::string::npos) << starved.err;

  const auto garbage = write("garbage.txt", "scgame v1 kind=orlpce\n");
  const auto parse = run({"reduce", "--seed", "1", "--input", garbage});
  EXPECT_EQ(parse.code, chase::cli::kUsage);
  EXPECT_NE(parse.err.find("line 1"), std::string::npos) << parse.err;

  EXPECT_EQ(run({"gen-game", "--seed", "1", "--n", "64", "--p", "2"}).code, chase::cli::kInfeasible);
  const auto game = path("wide.txt");
  ASSERT_EQ(run({"gen-game", "--seed", "1", "--n", "16", "--p", "2", "--t", "3", "--output", game}).code,
            chase::cli::kPass);
  EXPECT_EQ(run({"reduce", "--seed", "1", "--input", game}).code, chase::cli::kInfeasible);
  EXPECT_EQ(run({"reduce", "--seed", "1", "--input", game, "--allow-infeasible"}).code, chase::cli::kPass);

  const auto sc = path("sc.txt");
  ASSERT_EQ(run({"gen-game", "--seed", "1", "--kind", "sc", "--n", "3", "--p", "1", "--output", sc}).code,
            chase::cli::kPass);
  EXPECT_EQ(run({"solve-protocol", "--input", sc}).code, chase::cli::kUsage);
}
