// Copyright 2026 The QVC Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli/cli.hpp"
#include "qvc/data/dataset.hpp"
#include "qvc/model/qnn.hpp"
#include "qvc/sweep/records.hpp"

namespace fs = std::filesystem;
using namespace qvc;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run qvc_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("qvc_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  void small_data() {
    ASSERT_EQ(qvc_run({"gen-data", "--train-size", "80", "--test-size", "40", "--features", "6", "--seed", "3",
                       "--out", dir_.string()})
                  .code,
              0);
  }

  fs::path dir_;
};

std::string slurp(const std::string& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string field(const std::string& text, const std::string& key) {
  const auto at = text.find(key + "=");
  if (at == std::string::npos) return {};
  const auto start = at + key.size() + 1;
  return text.substr(start, text.find_first_of(" \n", start) - start);
}

}  // namespace

TEST_F(CliTest, GenDataDefaultsAndDeterminism) {
  ASSERT_EQ(qvc_run({"gen-data", "--out", path("a"), "--seed", "4"}).code, 0);
  EXPECT_EQ(data::load_csv(path("a/train.csv")).num_rows(), 1000u);
  EXPECT_EQ(data::load_csv(path("a/test.csv")).num_rows(), 500u);
  ASSERT_EQ(qvc_run({"gen-data", "--out", path("b"), "--seed", "4"}).code, 0);
  for (const char* f : {"train.csv", "test.csv", "importance.txt"}) {
    EXPECT_EQ(slurp(path(std::string("a/") + f)), slurp(path(std::string("b/") + f))) << f;
  }
}

TEST_F(CliTest, GenDataZeroRowsIsUsageError) {
  const auto r = qvc_run({"gen-data", "--train-size", "0", "--out", path("x")});
  EXPECT_EQ(r.code, cli::kExitUsage);
  EXPECT_FALSE(r.err.empty());
}

TEST_F(CliTest, UnknownSubcommandAndMissingFlags) {
  EXPECT_EQ(qvc_run({}).code, cli::kExitUsage);
  EXPECT_EQ(qvc_run({"fly"}).code, cli::kExitUsage);
  EXPECT_EQ(qvc_run({"train"}).code, cli::kExitUsage);
  EXPECT_EQ(qvc_run({"train", "--train", "x.csv", "--ansatz", "zz"}).code, cli::kExitUsage);
  EXPECT_EQ(qvc_run({"--help"}).code, 0);
}

TEST_F(CliTest, TrainThenEvalReproducesTrainAccuracy) {
  small_data();
  const auto t = qvc_run({"train", "--train", path("train.csv"), "--importance", path("importance.txt"), "--num-feat",
                          "3", "--reps", "1", "--maxiter", "60", "--out", path("m.json")});
  ASSERT_EQ(t.code, 0) << t.err;
  const auto e = qvc_run({"eval", "--model", path("m.json"), "--test", path("train.csv")});
  ASSERT_EQ(e.code, 0) << e.err;
  EXPECT_EQ(field(t.out, "train_accuracy"), field(e.out, "accuracy"));
  EXPECT_NE(e.out.find("actual\\predicted"), std::string::npos);
}

TEST_F(CliTest, PtdWithFullEntanglementWarns) {
  small_data();
  const auto t = qvc_run({"train", "--train", path("train.csv"), "--num-feat", "3", "--reps", "1", "--ansatz", "ptd",
                          "--entangle", "fl", "--maxiter", "20", "--out", path("m.json")});
  EXPECT_EQ(t.code, 0) << t.err;
  EXPECT_NE(t.err.find("pw"), std::string::npos);
}

TEST_F(CliTest, MissingDatasetIsRuntimeError) {
  const auto t = qvc_run({"train", "--train", path("absent.csv"), "--out", path("m.json")});
  EXPECT_EQ(t.code, cli::kExitRuntime);
  EXPECT_NE(t.err.find("absent.csv"), std::string::npos);
}

TEST_F(CliTest, EvalPerfectAndInvertedFixtures) {
  small_data();
  ASSERT_EQ(qvc_run({"train", "--train", path("train.csv"), "--num-feat", "3", "--reps", "1", "--maxiter", "30",
                     "--out", path("m.json")})
                .code,
            0);
  const auto m = model::load_model(path("m.json"));
  auto ds = data::select_features(data::load_csv(path("test.csv")), m.feature_names());
  for (std::size_t i = 0; i < ds.num_rows(); ++i) ds.labels[i] = m.forward(ds.row(i)).label;
  data::write_csv(ds, path("perfect.csv"));
  for (auto& l : ds.labels) l = l == data::Label::Valid ? data::Label::Invalid : data::Label::Valid;
  data::write_csv(ds, path("inverted.csv"));
  EXPECT_EQ(field(qvc_run({"eval", "--model", path("m.json"), "--test", path("perfect.csv")}).out, "accuracy"), "1");
  EXPECT_EQ(field(qvc_run({"eval", "--model", path("m.json"), "--test", path("inverted.csv")}).out, "accuracy"),
            "0");
}

TEST_F(CliTest, EvalListsMissingColumns) {
  small_data();
  ASSERT_EQ(qvc_run({"train", "--train", path("train.csv"), "--num-feat", "2", "--reps", "1", "--maxiter", "10",
                     "--out", path("m.json")})
                .code,
            0);
  const auto m = model::load_model(path("m.json"));
  auto ds = data::load_csv(path("test.csv"));
  for (auto& n : ds.feature_names) {
    if (n == m.feature_names()[1]) n = "renamed";
  }
  data::write_csv(ds, path("bad.csv"));
  const auto e = qvc_run({"eval", "--model", path("m.json"), "--test", path("bad.csv")});
  EXPECT_NE(e.code, 0);
  EXPECT_NE(e.err.find("missing: " + m.feature_names()[1]), std::string::npos) << e.err;
}

TEST_F(CliTest, CircuitReportsParameterCounts) {
  EXPECT_NE(qvc_run({"circuit", "--ansatz", "ep_is", "--qubits", "5", "--reps", "7", "--entangle", "sca"})
                .out.find("trainable=75"),
            std::string::npos);
  EXPECT_NE(qvc_run({"circuit", "--ansatz", "ra", "--qubits", "3", "--reps", "1", "--entangle", "fl"})
                .out.find("trainable=6"),
            std::string::npos);
  EXPECT_NE(qvc_run({"circuit", "--ansatz", "es", "--qubits", "3", "--reps", "2", "--entangle", "sca"})
                .out.find("trainable=9"),
            std::string::npos);
  const auto fm = qvc_run({"circuit", "--feature-map", "--qubits", "3"});
  EXPECT_NE(fm.out.find("feature_slots=3"), std::string::npos);
  EXPECT_EQ(qvc_run({"circuit", "--qubits", "1"}).code, cli::kExitUsage);
}

TEST_F(CliTest, ConfigFileSuppliesFlagsAndCommandLineWins) {
  {
    std::ofstream f(path("c.json"));
    f << R"({"ansatz": "ep_is", "qubits": 5, "reps": 7, "entangle": "sca"})";
  }
  EXPECT_NE(qvc_run({"circuit", "--config", path("c.json")}).out.find("trainable=75"), std::string::npos);
  EXPECT_NE(qvc_run({"circuit", "--config", path("c.json"), "--reps", "1"}).out.find("trainable=15"),
            std::string::npos);
  {
    std::ofstream f(path("bad.json"));
    f << "[1, 2]";
  }
  EXPECT_EQ(qvc_run({"circuit", "--config", path("bad.json")}).code, cli::kExitUsage);
  EXPECT_EQ(qvc_run({"circuit", "--config", path("nope.json")}).code, cli::kExitUsage);
}

TEST(CliConfig, MergeKeepsExplicitFlags) {
  const auto p = fs::temp_directory_path() / "qvc_cli_merge.json";
  {
    std::ofstream f(p);
    f << R"({"num_feat": [4, 5], "seed": 3, "verbose": true, "maxiter": 1.5e2})";
  }
  const auto args = cli::merge_config_args({"sweep", "--config", p.string(), "--seed", "8"});
  const std::vector<std::string> expect{"sweep", "--config", p.string(), "--seed", "8", "--maxiter", "150",
                                        "--num-feat", "4", "5", "--verbose"};
  EXPECT_EQ(args, expect);
  fs::remove(p);
}

TEST_F(CliTest, SweepAnalyzeRoundTrip) {
  small_data();
  const auto s = qvc_run({"sweep", "--train", path("train.csv"), "--test", path("test.csv"), "--importance",
                          path("importance.txt"), "--num-feat", "2,3", "--reps", "1", "--entangle", "ln", "--ansatz",
                          "ra,ep_is", "--runs", "2", "--maxiter", "15", "--threads", "1", "--out", path("r.csv")});
  ASSERT_EQ(s.code, 0) << s.err;
  EXPECT_EQ(sweep::read_results(path("r.csv")).size(), 8u);
  const auto a = qvc_run({"analyze", "--results", path("r.csv"), "--out", path("tables"), "--box-stats",
                          path("box.csv")});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_NE(a.out.find("== ANOVA"), std::string::npos);
  EXPECT_NE(a.out.find("ranking of full combinations"), std::string::npos);
  EXPECT_TRUE(fs::exists(path("tables/anova.csv")));
  EXPECT_TRUE(fs::exists(path("box.csv")));
  // Single-valued hyperparameters are dropped from the ANOVA with a warning.
  EXPECT_NE(a.err.find("num_rep"), std::string::npos);
}

TEST_F(CliTest, AnalyzeEmptyResultsIsUsageError) {
  { std::ofstream f(path("empty.csv")); }
  EXPECT_EQ(qvc_run({"analyze", "--results", path("empty.csv")}).code, cli::kExitUsage);
  {
    std::ofstream f(path("header.csv"));
    f << sweep::kResultsHeader << '\n';
  }
  EXPECT_EQ(qvc_run({"analyze", "--results", path("header.csv")}).code, cli::kExitUsage);
  EXPECT_EQ(qvc_run({"analyze", "--results", path("none.csv")}).code, cli::kExitRuntime);
}
