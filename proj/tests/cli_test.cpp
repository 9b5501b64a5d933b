#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "flood/instances.hpp"
#include "flood_tools/cli.hpp"

using namespace flood;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "flood");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  int code = flood::tools::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("flood_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    auto p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, SolveMonochrome) {
  auto f = write("mono.flood.json", R"({"k": 2, "colors": [2, 2, 2], "edges": [[0, 1], [1, 2]]})");
  auto r = run({"solve", f});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, 6), "opt 0\n");
}

TEST_F(CliTest, SolveGadgetWithEveryEngine) {
  auto vc = write("edge.json", R"({"n": 2, "edges": [[0, 1]]})");
  auto red = run({"reduce", "vc-caterpillar", vc});
  ASSERT_EQ(red.code, 0) << red.err;
  auto f = write("gadget.flood.json", red.out);
  for (std::string engine : {"auto", "oracle", "interval"}) {
    auto r = run({"solve", f, "--engine", engine});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("opt 4\n"), std::string::npos) << engine;
  }
  auto r = run({"solve", f});
  EXPECT_NE(r.out.find("engine interval"), std::string::npos);
  auto split = run({"solve", f, "--engine", "split"});
  EXPECT_EQ(split.code, 1);
}

TEST_F(CliTest, AutoPrefersSplit) {
  auto f = write("star.flood.json", R"({"k": 3, "colors": [1, 2, 3], "edges": [[0, 1], [0, 2]]})");
  auto r = run({"solve", f, "--json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"engine\": \"split\""), std::string::npos);
}

TEST_F(CliTest, VerifyAcceptsAndRejects) {
  auto f = write("p.flood.json", R"({"k": 2, "colors": [1, 2, 1], "edges": [[0, 1], [1, 2]]})");
  auto good = write("good.json", R"([{"vertex": 1, "color": 1}])");
  auto bad = write("bad.json", R"([])");
  auto wrong = write("wrong.json", R"([[0, 7]])");
  EXPECT_EQ(run({"verify", f, "--moves", good}).code, 0);
  auto r = run({"verify", f, "--moves", bad});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.out.find("invalid"), std::string::npos);
  EXPECT_EQ(run({"verify", f, "--moves", wrong}).code, 3);
}

TEST_F(CliTest, OracleBudgetExitCode) {
  auto f = write("c.flood.json",
                 R"({"k": 3, "colors": [1, 2, 3, 1, 2, 3], "edges": [[0, 1], [1, 2], [2, 3], [3, 4], [4, 5], [0, 5]]})");
  auto r = run({"oracle", f, "--budget", "2"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("budget"), std::string::npos);
  EXPECT_EQ(run({"oracle", f}).code, 0);
}

TEST_F(CliTest, InputErrors) {
  EXPECT_EQ(run({"solve", (dir_ / "missing.json").string()}).code, 1);
  auto f = write("bad.flood.json", R"({"k": 1, "colors": [2], "edges": []})");
  auto r = run({"solve", f});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("colors[0]"), std::string::npos);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"solve", f, "--engine", "magic"}).code, 1);
}

TEST_F(CliTest, GenIsDeterministicAndParses) {
  auto a = run({"gen", "proper_interval", "--n", "8", "--k", "3", "--seed", "5"});
  auto b = run({"gen", "proper_interval", "--n", "8", "--k", "3", "--seed", "5"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NO_THROW(parse_instance(a.out));
  EXPECT_EQ(run({"gen", "path", "--n", "2", "--k", "3"}).code, 1);
}

TEST_F(CliTest, ReduceProperInterval) {
  auto vc = write("p3.json", R"({"n": 3, "edges": [[0, 1], [1, 2]]})");
  auto r = run({"reduce", "vc-interval", vc});
  ASSERT_EQ(r.code, 0) << r.err;
  auto doc = parse_instance(r.out);
  EXPECT_EQ(doc.vertex_count(), 11);
  EXPECT_TRUE(doc.intervals.has_value());
  auto f = write("pi.flood.json", r.out);
  EXPECT_NE(run({"solve", f}).out.find("opt 5"), std::string::npos);
  auto edge = write("edge.json", R"({"n": 2, "edges": [[0, 1]]})");
  EXPECT_EQ(run({"reduce", "vc-interval", edge}).code, 1);
}

TEST_F(CliTest, BenchGadgetTable) {
  auto r = run({"bench", "--suite", "gadget"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("instance", 0), 0u);
  EXPECT_NE(r.out.find("gadget"), std::string::npos);
  EXPECT_EQ(run({"bench", "--suite", "nope"}).code, 1);
}

TEST_F(CliTest, HelpExitsCleanly) { EXPECT_EQ(run({"--help"}).code, 0); }
