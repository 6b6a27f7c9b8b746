// Copyright 2026 The maxknap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "maxknap/cli/bench.hpp"
#include "maxknap/cli/cli.hpp"
#include "maxknap/cli/formats.hpp"
#include "maxknap/cli/generate.hpp"
#include "maxknap/errors.hpp"

namespace maxknap::cli {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("maxknap_cli_test_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
    unsetenv("KNAP_SEED");
  }
  void TearDown() override {
    fs::remove_all(dir_);
    unsetenv("KNAP_SEED");
  }
  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  fs::path dir_;
};

TEST_F(CliTest, KnapsackClassicPrintsOptimum) {
  const std::string inst = write("inst.txt", "# two items\n2 5\n2 3\n3 4\n");
  const CliRun r = run({"knapsack", "--algo", "classic", inst});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "7\n");
  for (const char* algo : {"conv", "small"}) {
    EXPECT_EQ(run({"knapsack", "--algo", algo, inst}).out, "7\n") << algo;
    EXPECT_EQ(run({"knapsack", "--algo", algo, "--randomized-only", inst}).out, "7\n") << algo;
  }
  EXPECT_EQ(run({"knapsack", "--profile", inst}).out, "0 0 3 4 4 7\n");
}

TEST_F(CliTest, KnapsackMultiplicityAlgorithms) {
  const std::string unbounded = write("u.txt", "2 10\n2 3 inf\n3 5 inf\n");
  for (const char* algo : {"classic", "infinite", "unbounded-power", "unbounded-small"}) {
    EXPECT_EQ(run({"knapsack", "--algo", algo, unbounded}).out, "16\n") << algo;
  }
  const std::string given = write("g.txt", "1 7\n2 3 3\n");
  EXPECT_EQ(run({"knapsack", "--algo", "given", given}).out, "9\n");
  const CliRun wrong = run({"knapsack", "--algo", "conv", unbounded});
  EXPECT_EQ(wrong.code, kExitUsage);
  EXPECT_TRUE(wrong.out.empty());
}

TEST_F(CliTest, KnapsackJsonOutput) {
  const std::string inst = write("inst.txt", "2 5\n2 3\n3 4\n");
  const CliRun r = run({"knapsack", "--format", "json", inst});
  ASSERT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["optimum"], 7);
  EXPECT_EQ(j["capacity"], 5);
  EXPECT_EQ(j["algorithm"], "classic");
}

TEST_F(CliTest, ConvPrintsVector) {
  const std::string a = write("a.vec", "1 2\n");
  const std::string b = write("b.vec", "3\n4  # trailing comment\n");
  EXPECT_EQ(run({"conv", "--algo", "naive", a, b}).out, "4 5 6\n");
  EXPECT_EQ(run({"conv", "--algo", "bounded", a, b}).out, "4 5 6\n");
  EXPECT_EQ(run({"conv", "--algo", "distorted", a, b}).out, "4 5 6\n");
  EXPECT_EQ(run({"conv", "--algo", "min", a, b}).out, "4 5 6\n");
}

TEST_F(CliTest, ConvBoundedShiftsNegativeValues) {
  const std::string a = write("a.vec", "-5 -inf 7\n");
  const std::string b = write("b.vec", "-3 +inf\n");
  const CliRun naive = run({"conv", a, b});
  ASSERT_EQ(naive.code, kExitOk);
  EXPECT_EQ(naive.out, "-8 +inf 4 +inf\n");
  EXPECT_EQ(run({"conv", "--algo", "bounded", a, b}).out, naive.out);
}

TEST_F(CliTest, MissingFileIsUsageError) {
  const CliRun r = run({"knapsack", (dir_ / "nope.txt").string()});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("cannot open"), std::string::npos);
}

TEST_F(CliTest, MalformedInputsAreUsageErrors) {
  EXPECT_EQ(run({"knapsack", write("bad1.txt", "2 5\n2 3\n")}).code, kExitUsage);
  EXPECT_EQ(run({"knapsack", write("bad2.txt", "1 5\n0 3\n")}).code, kExitUsage);
  EXPECT_EQ(run({"conv", write("bad.vec", "1 x\n"), write("ok.vec", "1\n")}).code, kExitUsage);
  EXPECT_EQ(run({"treesep", write("bad.tree", "3\n0 1 1\n0 1 1\n")}).code, kExitUsage);
  EXPECT_EQ(run({"knapsack", "--algo", "nonsense", write("i.txt", "0 1\n")}).code, kExitUsage);
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
}

TEST_F(CliTest, OverflowExitsWithThree) {
  const std::string inst = write("big.txt", "2 2\n1 6000000000000000000\n1 6000000000000000000\n");
  const CliRun r = run({"knapsack", inst});
  EXPECT_EQ(r.code, kExitInternal);
  EXPECT_TRUE(r.out.empty());
}

TEST_F(CliTest, HelpExitsCleanly) {
  const CliRun r = run({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("knapsack"), std::string::npos);
}

TEST_F(CliTest, PowerAndTreesep) {
  const std::string a = write("a.vec", "0 3 1\n");
  EXPECT_EQ(run({"power", "--k", "2", a}).out, "0 3 6 4 2\n");
  EXPECT_EQ(run({"power", "--k", "4", "--cap", "5", a}).out, run({"power", "--oracle", "--k", "4", "--cap", "5", a}).out);
  const std::string tree = write("p.tree", "3\n0 1 1\n1 2 5\n");
  for (const char* algo : {"spine", "dp", "bounded", "brute"}) {
    EXPECT_EQ(run({"treesep", "--algo", algo, tree}).out, "0 1 1 0\n") << algo;
  }
  EXPECT_EQ(run({"treesep", "--m", "1", tree}).out, "1\n");
  EXPECT_EQ(run({"treesep", "--m", "9", tree}).code, kExitUsage);
}

TEST_F(CliTest, OutFlagWritesFile) {
  const std::string inst = write("inst.txt", "2 5\n2 3\n3 4\n");
  const std::string target = (dir_ / "result.txt").string();
  const CliRun r = run({"knapsack", "--out", target, inst});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(target);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_EQ(text, "7\n");
}

TEST_F(CliTest, GenIsDeterministicAndRoundTrips) {
  for (const char* kind : {"bounded-value", "bounded-size", "unbounded", "mult", "tree", "vector"}) {
    const CliRun first = run({"gen", kind, "--n", "12", "--t", "50", "--seed", "7"});
    const CliRun second = run({"gen", kind, "--n", "12", "--t", "50", "--seed", "7"});
    ASSERT_EQ(first.code, kExitOk) << kind << first.err;
    EXPECT_EQ(first.out, second.out) << kind;
    EXPECT_NE(first.out, run({"gen", kind, "--n", "12", "--t", "50", "--seed", "8"}).out) << kind;
    std::istringstream in(first.out);
    const std::string k = kind;
    if (k == "tree") {
      EXPECT_EQ(format_tree(parse_tree(in)), first.out);
    } else if (k == "vector") {
      EXPECT_EQ(format_vector(parse_vector(in)) + "\n", first.out);
    } else {
      EXPECT_EQ(format_instance(parse_instance(in)), first.out);
    }
  }
}

TEST_F(CliTest, GenRespectsParameters) {
  const CliRun r = run({"gen", "bounded-size", "--n", "200", "--t", "500", "--s-max", "6", "--seed", "3"});
  std::istringstream in(r.out);
  const KnapsackInstance inst = parse_instance(in);
  EXPECT_EQ(inst.items.size(), 200U);
  for (const Item& it : inst.items) EXPECT_LE(it.size, 6);
  const CliRun tree = run({"gen", "tree", "--n", "5", "--seed", "3"});
  std::istringstream tin(tree.out);
  EXPECT_EQ(parse_tree(tin).edges().size(), 4U);
  EXPECT_EQ(run({"gen", "pyramid"}).code, kExitUsage);
}

TEST_F(CliTest, SeedEnvironmentVariable) {
  const CliRun explicit_seed = run({"gen", "vector", "--n", "20", "--seed", "99"});
  setenv("KNAP_SEED", "99", 1);
  EXPECT_EQ(run({"gen", "vector", "--n", "20"}).out, explicit_seed.out);
  EXPECT_EQ(run({"gen", "vector", "--n", "20", "--seed", "5"}).out, run({"gen", "vector", "--n", "20", "--seed", "5"}).out);
  setenv("KNAP_SEED", "minus one", 1);
  EXPECT_EQ(run({"gen", "vector", "--n", "20"}).code, kExitUsage);
}

TEST_F(CliTest, RandomizedCommandsAreReproducible) {
  const std::string inst = write("inst.txt", run({"gen", "bounded-value", "--n", "30", "--t", "120", "--v-max", "5", "--seed", "4"}).out);
  const CliRun first = run({"knapsack", "--algo", "conv", "--profile", "--seed", "11", "--c-const", "2", inst});
  ASSERT_EQ(first.code, kExitOk);
  EXPECT_EQ(first.out, run({"knapsack", "--algo", "conv", "--profile", "--seed", "11", "--c-const", "2", inst}).out);
}

TEST_F(CliTest, BenchRecordCountAndFormats) {
  const CliRun r = run({"bench", "--algo", "bounded_range_conv,naive_conv", "--sizes", "64,128", "--seeds", "1,2", "--runs",
                     "3", "--verify"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 8U);
  for (const auto& rec : j) {
    for (const char* key : {"algorithm", "n", "t_or_e_max", "seed", "wall_nanos", "result_checksum"}) {
      EXPECT_TRUE(rec.contains(key)) << key;
    }
  }
  // The two algorithms compute the same convolution, so checksums agree.
  EXPECT_EQ(j[0]["result_checksum"], j[4]["result_checksum"]);
  const CliRun csv = run({"bench", "--sizes", "32", "--runs", "3", "--format", "csv"});
  EXPECT_EQ(csv.out.rfind("algorithm,n,t_or_e_max,seed,wall_nanos,result_checksum\n", 0), 0U);
  EXPECT_EQ(run({"bench", "--sizes", "64,32"}).code, kExitUsage);
  EXPECT_EQ(run({"bench", "--algo", "quantum"}).code, kExitUsage);
}

TEST_F(CliTest, BenchVerifiesEveryAlgorithm) {
  BenchSpec spec;
  spec.algorithms = bench_algorithms();
  spec.sizes = {40, 96};
  spec.seeds = {5};
  spec.runs = 3;
  spec.verify = true;
  const std::vector<BenchRecord> records = run_bench(spec);
  EXPECT_EQ(records.size(), bench_algorithms().size() * 2);
  const std::vector<BenchRecord> again = run_bench(spec);
  for (std::size_t i = 0; i < records.size(); ++i) {
    EXPECT_EQ(records[i].algorithm, again[i].algorithm);
    EXPECT_EQ(records[i].n, again[i].n);
    EXPECT_EQ(records[i].result_checksum, again[i].result_checksum);
  }
}

TEST(ChecksumTest, Fnv1aKnownValues) {
  EXPECT_EQ(fnv1a({}), 0xcbf29ce484222325ULL);
  const std::vector<std::int64_t> one{0};
  // FNV-1a of eight zero bytes.
  EXPECT_EQ(fnv1a(one), 0xa8c7f832281a39c5ULL);
}

}  // namespace
}  // namespace maxknap::cli
