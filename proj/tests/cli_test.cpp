// Copyright 2026 The ceei Authors
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

#include "ceei/cli.hpp"

#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <gtest/gtest.h>

#include "ceei/io.hpp"
#include "support/fixtures.hpp"

namespace ceei::cli {
namespace {

namespace fs = std::filesystem;

const std::string kData = CEEI_TEST_DATA;

struct Result {
  int code;
  io::Json body;
  std::string text;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  Result r{code, nullptr, out.str(), err.str()};
  if (!r.text.empty() && r.text.front() == '{') r.body = io::parse(r.text);
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    static std::atomic<int> counter{0};
    dir_ = fs::temp_directory_path() /
           ("ceei_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, VerifyExample2) {
  const auto r = invoke({"verify", "--market", kData + "/example2.json", "--alloc",
                         kData + "/example2_solution.json", "--prices", kData + "/example2_solution.json"});
  EXPECT_EQ(r.code, kPositive) << r.err;
  EXPECT_EQ(r.body["verdict"], "equilibrium");
}

TEST_F(CliTest, SolveTooFewItems) {
  const auto r = invoke({"solve", "--market", kData + "/two_buyers_one_item.json"});
  EXPECT_EQ(r.code, kNegative);
  EXPECT_EQ(r.body["verdict"], "none");
  EXPECT_EQ(r.body["reason"], "m < n");
}

TEST_F(CliTest, SolveExample2) {
  const auto r = invoke({"solve", "--market", kData + "/example2.json"});
  ASSERT_EQ(r.code, kPositive);
  EXPECT_EQ(r.body["allocation"].dump(), "[[1],[2],[3],[4],[5],[6,7,8]]");
  EXPECT_EQ(r.body["prices"].dump(), R"(["1","1","1","1","1","1/3","1/3","1/3"])");
}

TEST_F(CliTest, GenPartitionThenAllocFor) {
  const std::string prefix = path("p12");
  const auto gen = invoke({"gen", "partition", "--values", "1,2", "--out", prefix});
  ASSERT_EQ(gen.code, kPositive) << gen.err;
  EXPECT_TRUE(fs::exists(prefix + ".market.json"));
  EXPECT_TRUE(fs::exists(prefix + ".prices.json"));
  const auto r = invoke({"alloc-for", "--market", prefix + ".market.json", "--prices", prefix + ".prices.json"});
  EXPECT_EQ(r.code, kNegative);

  const std::string yes = path("p11");
  invoke({"gen", "partition", "--values", "1,1", "--out", yes});
  EXPECT_EQ(invoke({"alloc-for", "--market", yes + ".market.json", "--prices", yes + ".prices.json"}).code,
            kPositive);
}

TEST_F(CliTest, GenOutputFeedsBack) {
  // The gen body itself is accepted as market, allocation and prices input.
  const auto gen = invoke({"gen", "subsetsum-verify", "--values", "1,2", "--target", "3"});
  ASSERT_EQ(gen.code, kPositive);
  const std::string f = write("gadget.json", gen.text);
  const auto r = invoke({"verify", "--market", f, "--alloc", f, "--prices", f});
  EXPECT_EQ(r.code, kNegative);
  EXPECT_EQ(r.body["reason"], "suboptimal-bundle");
  EXPECT_EQ(r.body["witness"]["buyer"], 1);
  EXPECT_EQ(r.body["witness"]["bundle"].dump(), "[2,3]");
}

TEST_F(CliTest, GenGadgets) {
  EXPECT_EQ(invoke({"gen", "setpacking", "--ground", "2", "--sets", "1;1,2", "--threshold", "1"}).code, kPositive);
  const auto x3c = invoke({"gen", "x3c", "--universe", "1", "--sets", "1,2,3;1,2,3"});
  ASSERT_EQ(x3c.code, kPositive);
  EXPECT_EQ(x3c.body["trivially_no"], false);
  EXPECT_EQ(x3c.body["market"]["items"], 4);
  EXPECT_EQ(invoke({"gen", "partition-additive", "--values", "1,1,4"}).code, kPositive);
  const auto alloc = invoke({"gen", "subsetsum-alloc", "--values", "2,2", "--target", "3", "--out", path("sa")});
  ASSERT_EQ(alloc.code, kPositive);
  const auto p = invoke({"prices-for", "--market", path("sa") + ".market.json", "--alloc", path("sa") + ".alloc.json"});
  EXPECT_EQ(p.code, kPositive);
  EXPECT_EQ(invoke({"gen", "partition-additive", "--values", "1,2"}).code, kError);
  EXPECT_EQ(invoke({"gen", "nonsense"}).code, kError);
  EXPECT_EQ(invoke({"gen", "x3c", "--universe", "1", "--sets", "1,2"}).code, kError);
}

TEST_F(CliTest, Validate) {
  const auto ok = invoke({"validate", "--market", kData + "/example2.json"});
  EXPECT_EQ(ok.code, kPositive);
  EXPECT_EQ(ok.body["valid"], true);
  const auto bad = invoke({"validate", "--market", kData + "/empty_demand.json"});
  EXPECT_EQ(bad.code, kNegative);
  EXPECT_EQ(bad.body["valid"], false);
  EXPECT_EQ(bad.body["buyer"], 2);
  EXPECT_EQ(invoke({"validate", "--market", kData + "/malformed.json"}).code, kError);
}

TEST_F(CliTest, WelfareCommands) {
  const std::string ex4 = write("ex4.json", io::serialize(io::market_to_json(testing::example4())));
  const auto mw = invoke({"maxwelfare", "--market", ex4});
  ASSERT_EQ(mw.code, kPositive);
  EXPECT_EQ(mw.body["welfare"], "0");
  const auto apx = invoke({"apxwelfare", "--market", ex4});
  ASSERT_EQ(apx.code, kPositive);
  EXPECT_EQ(apx.body["welfare"], "0");
  const auto oracle = invoke({"oracle", "--market", ex4, "--query", "maxwelfare"});
  ASSERT_EQ(oracle.code, kPositive);
  EXPECT_EQ(oracle.body["welfare"], "0");
  EXPECT_EQ(invoke({"oracle", "--market", ex4}).code, kPositive);
  EXPECT_EQ(invoke({"oracle", "--market", ex4, "--query", "bogus"}).code, kError);

  const std::string add = write("add.json", io::serialize(io::market_to_json(testing::additive_market({{"1"}}))));
  EXPECT_EQ(invoke({"maxwelfare", "--market", add}).code, kError);
  EXPECT_EQ(invoke({"apxwelfare", "--market", add}).code, kError);
  EXPECT_EQ(invoke({"maxwelfare", "--market", kData + "/two_buyers_one_item.json"}).code, kNegative);
}

TEST_F(CliTest, PricesFor) {
  const std::string ex4 = write("ex4.json", io::serialize(io::market_to_json(testing::example4())));
  const std::string opt = write("opt.json", "[[1,2],[3]]");
  const auto none = invoke({"prices-for", "--market", ex4, "--alloc", opt});
  EXPECT_EQ(none.code, kNegative);
  const std::string zero = write("zero.json", R"({"allocation": [[1],[2,3]]})");
  const auto some = invoke({"prices-for", "--market", ex4, "--alloc", zero});
  ASSERT_EQ(some.code, kPositive);
  const std::string sol = write("sol.json", some.text);
  EXPECT_EQ(invoke({"verify", "--market", ex4, "--alloc", sol, "--prices", sol}).code, kPositive);
}

TEST_F(CliTest, Errors) {
  EXPECT_EQ(invoke({}).code, kError);
  EXPECT_EQ(invoke({"frobnicate"}).code, kError);
  EXPECT_EQ(invoke({"solve"}).code, kError);
  EXPECT_EQ(invoke({"solve", "--market", path("missing.json")}).code, kError);
  EXPECT_EQ(invoke({"oracle", "--market", kData + "/example2.json", "--cap-states", "10"}).code, kError);
  const std::string short_prices = write("short.json", R"(["1"])");
  EXPECT_EQ(invoke({"verify", "--market", kData + "/example2.json", "--alloc",
                    kData + "/example2_solution.json", "--prices", short_prices})
                .code,
            kError);
  EXPECT_EQ(invoke({"--help"}).code, kPositive);
}

TEST_F(CliTest, AdditiveSolve) {
  const auto gen = invoke({"gen", "x3c", "--universe", "2", "--sets", "1,2,3;1,2,4", "--out", path("x")});
  ASSERT_EQ(gen.code, kPositive);
  const auto r = invoke({"solve", "--market", path("x") + ".market.json"});
  EXPECT_EQ(r.code, kNegative);
  EXPECT_EQ(r.body["reason"], "no allocation admits equilibrium prices");
}

}  // namespace
}  // namespace ceei::cli
