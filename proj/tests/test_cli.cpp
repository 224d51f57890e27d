#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>
#include <sys/wait.h>

#include "gprod/edge_list.hpp"
#include "gprod/generators.hpp"

namespace fs = std::filesystem;

namespace {

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("gprod_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  // Runs the CLI with `args`, capturing stdout into `out`; returns the exit status.
  int run(const std::string& args, std::string* out = nullptr) const {
    const std::string capture = path("stdout.txt");
    const std::string cmd = std::string(GPROD_CLI) + " " + args + " > " + capture + " 2> " + path("stderr.txt");
    const int status = std::system(cmd.c_str());
    if (out) *out = slurp(capture);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, GenerateCompleteGraph) {
  ASSERT_EQ(run("generate --model er --n 5 --p 1 --seed 7 -o " + path("g.el")), 0);
  const gprod::Graph g = gprod::read_edge_list_file(path("g.el"));
  EXPECT_EQ(g, gprod::complete_graph(5));
}

TEST_F(Cli, GenerateIsReproducibleAndRoundTrips) {
  ASSERT_EQ(run("generate --model er --n 40 --p 0.3 --seed 11 -o " + path("a.el")), 0);
  ASSERT_EQ(run("generate --model er --n 40 --p 0.3 --seed 11 -o " + path("b.el")), 0);
  EXPECT_EQ(slurp(path("a.el")), slurp(path("b.el")));
  gprod::GeneratorSpec spec{gprod::Model::erdos_renyi, 40, {}};
  spec.params.p = 0.3;
  EXPECT_EQ(gprod::read_edge_list_file(path("a.el")), gprod::generate(spec, gprod::RngSeed{11, 0}));
  ASSERT_EQ(run("generate --model ba --n 40 --density 0.5 --seed 3 -o " + path("ba.el")), 0);
  EXPECT_EQ(gprod::read_edge_list_file(path("ba.el")).edge_count(), 12U * 40U - 78U);
}

TEST_F(Cli, ProductThenCensus) {
  ASSERT_EQ(run("generate --model complete --n 3 -o " + path("k3.el")), 0);
  ASSERT_EQ(run("product --kind tensor -a " + path("k3.el") + " -b " + path("k3.el") + " -o " + path("t.el")), 0);
  EXPECT_TRUE(fs::exists(path("t.el.map")));
  EXPECT_EQ(slurp(path("t.el.map")).substr(0, 12), "0 0 0\n1 0 1\n");
  std::string out;
  ASSERT_EQ(run("census -i " + path("t.el") + " --kmax 3", &out), 0);
  const auto j = nlohmann::json::parse(out);
  EXPECT_EQ(j.at("3"), "6");
  ASSERT_EQ(run("census -i " + path("t.el") + " --kmax 3 --format csv --per-vertex " + path("pv.csv"), &out), 0);
  EXPECT_NE(out.find("3,6\n"), std::string::npos);
  EXPECT_EQ(slurp(path("pv.csv")).rfind("v,k,a_k\n", 0), 0U);
}

TEST_F(Cli, TheoryPrintsValue) {
  std::string out;
  ASSERT_EQ(run("theory --kind mean-zk --n 3 --p 0.5 --k 2", &out), 0);
  EXPECT_EQ(out, "mean-zk,3,0.5,2,4.5\n");
  ASSERT_EQ(run("theory --kind all --n 50 --p 1/2 --k 3 --header", &out), 0);
  EXPECT_EQ(out.rfind("kind,n,p,k,value\n", 0), 0U);
  EXPECT_EQ(run("theory --kind k-star-lower --n 64 --p 0.5"), 1);
  EXPECT_EQ(run("theory --kind bogus --n 3 --p 0.5"), 1);
}

TEST_F(Cli, Mcs) {
  ASSERT_EQ(run("generate --model path --n 3 -o " + path("p3.el")), 0);
  ASSERT_EQ(run("generate --model complete --n 3 -o " + path("k3.el")), 0);
  std::string out;
  ASSERT_EQ(run("mcs -a " + path("p3.el") + " -b " + path("k3.el"), &out), 0);
  EXPECT_EQ(nlohmann::json::parse(out).at("size"), 2);
  ASSERT_EQ(run("mcs --method brute-force -a " + path("p3.el") + " -b " + path("k3.el"), &out), 0);
  EXPECT_EQ(nlohmann::json::parse(out).at("size"), 2);
}

TEST_F(Cli, Metrics) {
  ASSERT_EQ(run("generate --model complete --n 4 -o " + path("k4.el")), 0);
  std::string out;
  ASSERT_EQ(run("metrics -i " + path("k4.el") + " --k 3", &out), 0);
  EXPECT_EQ(out.rfind("v,degree,a_k,c_k,eff\n0,3,1,1,1\n", 0), 0U);
  ASSERT_EQ(run("metrics -i " + path("k4.el") + " --vertex 2 --format json", &out), 0);
  EXPECT_EQ(nlohmann::json::parse(out).size(), 1U);
}

TEST_F(Cli, ExperimentIsolatedMean) {
  std::string out;
  ASSERT_EQ(run("experiment --name isolated-mean --n 2 --p 0.5 --replicas 100000 --seed 1 -o " + path("r.json") +
                    " --plot " + path("r.csv"),
                &out),
            0);
  const auto j = nlohmann::json::parse(slurp(path("r.json")));
  EXPECT_EQ(j.at("schema"), 1);
  const auto& row = j.at("rows")[0];
  EXPECT_DOUBLE_EQ(row.at("theory").get<double>(), 3.0);
  EXPECT_LT(std::abs(row.at("z").get<double>()), 4.0);
  EXPECT_TRUE(j.at("acceptance").at("passed").get<bool>());
  EXPECT_EQ(slurp(path("r.csv")).rfind("series,n,mean,standard_error,theory\n", 0), 0U);
  EXPECT_NE(out.find("acceptance passed"), std::string::npos);
}

TEST_F(Cli, ExperimentSeedReproducible) {
  const std::string args = "experiment --name clique-count-mean --n 5,6 --k 2 --replicas 50 --seed 4 --threads ";
  ASSERT_EQ(run(args + "1 -o " + path("a.json")), 0);
  ASSERT_EQ(run(args + "3 -o " + path("b.json")), 0);
  EXPECT_EQ(nlohmann::json::parse(slurp(path("a.json"))).at("rows"), nlohmann::json::parse(slurp(path("b.json"))).at("rows"));
}

TEST_F(Cli, AcceptanceFailureExitCode) {
  // A zero z bound cannot be met by a finite sample.
  EXPECT_EQ(run("experiment --name clique-count-mean --n 6 --k 2 --replicas 50 --seed 1 --z-threshold 0 -o " +
                path("c.json")),
            3);
  EXPECT_TRUE(fs::exists(path("c.json")));
}

TEST_F(Cli, UsageAndDomainErrors) {
  EXPECT_EQ(run("census"), 2);
  EXPECT_EQ(run("frobnicate"), 2);
  EXPECT_EQ(run("generate --model er --n 5 --p 1 --bogus-flag"), 2);
  EXPECT_EQ(run("census -i " + path("missing.el")), 2);
  EXPECT_EQ(run("generate --model er --n 5 --p 2 -o " + path("bad.el")), 1);
  EXPECT_FALSE(fs::exists(path("bad.el")));
  std::ofstream(path("broken.el")) << "3 2\n0 1\n";
  EXPECT_EQ(run("census -i " + path("broken.el") + " -o " + path("c.json")), 1);
  EXPECT_FALSE(fs::exists(path("c.json")));
  EXPECT_FALSE(fs::exists(path("c.json.tmp")));
  EXPECT_EQ(run("--help"), 0);
}
