#include <cstdlib>
#include <filesystem>
#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"
#include "radial/experiments.hpp"
#include "radial/io.hpp"

using namespace radial;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("radial_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::remove_all(dir_);
    std::filesystem::create_directories(dir_);
    ::unsetenv("RADIAL_EXPLORER_SEED");
  }
  void TearDown() override {
    std::filesystem::remove_all(dir_);
    ::unsetenv("RADIAL_EXPLORER_SEED");
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string write(const std::string& name, const json& j) const {
    write_text_file(path(name), j.dump());
    return path(name);
  }

  std::filesystem::path dir_;
};

std::size_t line_count(const std::string& text) {
  return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

}  // namespace

TEST_F(CliTest, GenerateMatchesLibrary) {
  const Result r = run_cli({"generate", "-n", "30", "--edge-prob", "0.1", "--seed", "42"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_EQ(graph_from_json(json::parse(r.out)), generate_random_graph(30, 0.1, 42));
  EXPECT_EQ(run_cli({"generate", "-n", "30", "--edge-prob", "0.1", "--seed", "42"}).out, r.out);
}

TEST_F(CliTest, SeedFromEnvironment) {
  ::setenv("RADIAL_EXPLORER_SEED", "42", 1);
  const Result env = run_cli({"generate", "-n", "30", "--edge-prob", "0.1"});
  ASSERT_EQ(env.code, cli::kExitOk) << env.err;
  EXPECT_EQ(graph_from_json(json::parse(env.out)), generate_random_graph(30, 0.1, 42));
  // An explicit flag wins.
  const Result flag = run_cli({"generate", "-n", "30", "--edge-prob", "0.1", "--seed", "7"});
  EXPECT_EQ(graph_from_json(json::parse(flag.out)), generate_random_graph(30, 0.1, 7));
  ::setenv("RADIAL_EXPLORER_SEED", "abc", 1);
  EXPECT_EQ(run_cli({"generate", "-n", "5", "--edge-prob", "0.9"}).code, cli::kExitUsage);
}

TEST_F(CliTest, DefaultSeedIsOne) {
  const Result r = run_cli({"generate", "-n", "20", "--edge-prob", "0.2"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_EQ(graph_from_json(json::parse(r.out)), generate_random_graph(20, 0.2, 1));
}

TEST_F(CliTest, LayoutOfSingleEdge) {
  const std::string g = write("k2.json", json::parse(R"({"nodes":[{"id":0},{"id":1}],"edges":[[0,1]]})"));
  const Result r = run_cli({"layout", "--graph", g, "--root", "0"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const Drawing d = drawing_from_json(json::parse(r.out), 2);
  EXPECT_NEAR(distance(d[0], d[1]), 100.0, 1e-12);
  EXPECT_EQ(run_cli({"layout", "--graph", g, "--root", "0"}).out, r.out);
}

TEST_F(CliTest, LayoutOfCycleWithTree) {
  const std::string g = write(
      "c4.json", json::parse(R"({"nodes":[{"id":0},{"id":1},{"id":2},{"id":3}],"edges":[[0,1],[1,2],[2,3],[3,0]]})"));
  const Result r = run_cli({"layout", "--graph", g, "--root", "0", "--tree-output", path("tree.json"),
                            "-o", path("drawing.json")});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  const Drawing d = drawing_from_json(read_json_file(path("drawing.json")), 4);
  // Root children 1 and 3 at angles pi and 2pi; node 2 straight on from node 1
  // at 2 * 100 * sin(pi / 4).
  EXPECT_NEAR(d[1].x, -100.0, 1e-9);
  EXPECT_NEAR(d[3].x, 100.0, 1e-9);
  EXPECT_NEAR(d[2].x, -100.0 - 100.0 * std::sqrt(2.0), 1e-9);
  EXPECT_NEAR(d[2].y, 0.0, 1e-9);
  const RootedTree t = tree_from_json(read_json_file(path("tree.json")), 4);
  EXPECT_EQ(t.children(0), (std::vector<NodeId>{1, 3}));

  const Result yee = run_cli({"layout", "--graph", g, "--root", "0", "--algorithm", "yee"});
  ASSERT_EQ(yee.code, cli::kExitOk) << yee.err;
  const Drawing dy = drawing_from_json(json::parse(yee.out), 4);
  EXPECT_NEAR(std::hypot(dy[2].x, dy[2].y), 200.0, 1e-9);

  const Result svg = run_cli({"export-svg", "--drawing", path("drawing.json"), "--tree",
                              path("tree.json"), "--containment", "--labels"});
  ASSERT_EQ(svg.code, cli::kExitOk) << svg.err;
  EXPECT_EQ(svg.out, read_text_file(std::string(RADIAL_GOLDEN_DIR) + "/cycle4_pc.svg"));
}

TEST_F(CliTest, AnimateWritesHeaderAndFrames) {
  const std::string g = write("g.json", graph_to_json(generate_random_graph(12, 0.3, 3)));
  const Result r = run_cli({"animate", "--graph", g, "--root", "4", "--steps", "5", "--seed", "9"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_EQ(line_count(r.out), 1u + 5u + 2u);
  EXPECT_EQ(run_cli({"animate", "--graph", g, "--root", "4", "--steps", "5", "--seed", "9"}).out, r.out);
  const Result yee = run_cli({"animate", "--graph", g, "--root", "4", "--steps", "5", "--algorithm", "yee"});
  ASSERT_EQ(yee.code, cli::kExitOk) << yee.err;
  EXPECT_EQ(line_count(yee.out), 1u + 5u + 2u);
}

TEST_F(CliTest, AnimateFromGivenDrawingAndTree) {
  const Graph graph = generate_random_graph(10, 0.4, 4);
  const std::string g = write("g.json", graph_to_json(graph));
  ASSERT_EQ(run_cli({"layout", "--graph", g, "--root", "0", "--tree-output", path("t.json"), "-o",
                     path("d.json")})
                .code,
            cli::kExitOk);
  const Result r = run_cli({"animate", "--graph", g, "--root", "3", "--drawing", path("d.json"),
                            "--old-tree", path("t.json"), "--steps", "2"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  std::istringstream lines(r.out);
  std::string header, first;
  std::getline(lines, header);
  std::getline(lines, first);
  EXPECT_EQ(json::parse(header)["root"], 3);
  EXPECT_EQ(drawing_from_json({{"positions", json::parse(first)["positions"]}}, 10),
            drawing_from_json(read_json_file(path("d.json")), 10));
}

TEST_F(CliTest, ExperimentWritesCsvAndManifest) {
  const std::vector<std::string> args = {"experiment", "iso",  "--scale", "10",
                                         "--seed",     "7",    "-o",      path("iso.csv")};
  ASSERT_EQ(run_cli(args).code, cli::kExitOk);
  const std::string csv = read_text_file(path("iso.csv"));
  EXPECT_EQ(line_count(csv), 1u + 71u * 2u);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), kCsvHeader);
  const json manifest = read_json_file(path("iso.csv.manifest.json"));
  EXPECT_EQ(manifest["seed"], 7);
  EXPECT_EQ(manifest["graphs_run_per_order"], 1);

  ASSERT_EQ(run_cli(args).code, cli::kExitOk);
  EXPECT_EQ(read_text_file(path("iso.csv")), csv);
}

TEST_F(CliTest, ExperimentToStdout) {
  const Result r = run_cli({"experiment", "span", "--orders", "20..21", "--graphs-per-order", "1",
                            "--edge-prob", "0.3", "--samples", "8"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_EQ(line_count(r.out), 1u + 2u * 4u);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"bogus"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"generate"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"generate", "-n", "5", "--edge-prob", "2"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"layout"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"experiment", "nope"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"experiment", "iso", "--orders", "x..9"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"experiment", "iso", "--orders", "50..40"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"experiment", "iso", "--samples", "1"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"experiment", "iso", "--phi", "0"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"generate", "-n", "5", "--bogus-flag", "1"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"layout", "--graph", "g.json", "--steps", "3"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"--help"}).code, cli::kExitOk);
}

TEST_F(CliTest, DataErrors) {
  EXPECT_EQ(run_cli({"layout", "--graph", path("missing.json")}).code, cli::kExitData);
  write_text_file(path("bad.json"), "{");
  EXPECT_EQ(run_cli({"layout", "--graph", path("bad.json")}).code, cli::kExitData);
  const std::string disconnected =
      write("d.json", json::parse(R"({"nodes":[{"id":0},{"id":1}],"edges":[]})"));
  EXPECT_EQ(run_cli({"layout", "--graph", disconnected}).code, cli::kExitData);
  const std::string g = write("k2.json", json::parse(R"({"nodes":[{"id":0},{"id":1}],"edges":[[0,1]]})"));
  EXPECT_EQ(run_cli({"layout", "--graph", g, "--root", "5"}).code, cli::kExitData);
  EXPECT_EQ(run_cli({"generate", "-n", "30", "--edge-prob", "0"}).code, cli::kExitData);
}
