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

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>

#include "qvc/data/dataset.hpp"
#include "qvc/error.hpp"

using namespace qvc;
using namespace qvc::data;

namespace {

constexpr double kPiD = std::numbers::pi;

std::filesystem::path temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / ("qvc_test_data_" + name);
  std::ofstream(path) << contents;
  return path;
}

// Hand table: scores computed independently (numpy corrcoef) and frozen.
Dataset hand_table() {
  return parse_csv(
      "a,b,c,d,label\n"
      "1,10,3,5,1\n"
      "2,9,1,5,0\n"
      "3,12,4,5,1\n"
      "4,7,1,5,0\n"
      "5,15,9,5,1\n"
      "6,6,2,5,0\n");
}

double threshold_accuracy(const Dataset& ds, std::size_t col) {
  std::vector<double> xs;
  for (std::size_t i = 0; i < ds.num_rows(); ++i) xs.push_back(ds.at(i, col));
  std::sort(xs.begin(), xs.end());
  double best = 0.0;
  for (double t : xs) {
    std::size_t hits = 0;
    for (std::size_t i = 0; i < ds.num_rows(); ++i) {
      hits += (ds.at(i, col) >= t) == (ds.labels[i] == Label::Valid);
    }
    const double acc = static_cast<double>(hits) / static_cast<double>(ds.num_rows());
    best = std::max({best, acc, 1.0 - acc});
  }
  return best;
}

}  // namespace

TEST(LoadCsv, TwoRows) {
  const auto path = temp_file("two.csv", "x,y,label\n0.5,1,1\n-2,3e2,0\n");
  const auto ds = load_csv(path);
  EXPECT_EQ(ds.num_rows(), 2u);
  EXPECT_EQ(ds.feature_names, (std::vector<std::string>{"x", "y"}));
  EXPECT_EQ(ds.labels, (std::vector<Label>{Label::Valid, Label::Invalid}));
  EXPECT_EQ(ds.values, (std::vector<double>{0.5, 1.0, -2.0, 300.0}));
}

TEST(LoadCsv, LabelColumnAnywhere) {
  const auto ds = parse_csv("label,x\n1,4\n");
  EXPECT_EQ(ds.feature_names, (std::vector<std::string>{"x"}));
  EXPECT_EQ(ds.values, (std::vector<double>{4.0}));
}

TEST(LoadCsv, MissingLabel) {
  try {
    parse_csv("x,y\n1,2\n", "f.csv");
    FAIL();
  } catch (const LoadError& e) {
    EXPECT_NE(std::string(e.what()).find("label"), std::string::npos);
  }
}

TEST(LoadCsv, RejectsNanAndTextNamingCell) {
  try {
    parse_csv("x,y,label\n1,2,0\n3,NaN,1\n", "f.csv");
    FAIL();
  } catch (const LoadError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("row 3"), std::string::npos) << msg;
    EXPECT_NE(msg.find("column 2"), std::string::npos) << msg;
  }
  EXPECT_THROW(parse_csv("x,label\nabc,1\n"), LoadError);
  EXPECT_THROW(parse_csv("x,label\ninf,1\n"), LoadError);
  EXPECT_THROW(parse_csv("x,label\n1,2\n"), LoadError);
}

TEST(LoadCsv, RaggedRow) {
  EXPECT_THROW(parse_csv("x,y,label\n1,2,1\n1,1\n"), LoadError);
  EXPECT_THROW(load_csv("/nonexistent/qvc.csv"), LoadError);
}

TEST(WriteCsv, RoundTripBitExact) {
  auto ds = generate_synthetic(50, 5, 1.5, 3);
  ds.importance_order.reset();
  const auto path = std::filesystem::temp_directory_path() / "qvc_test_roundtrip.csv";
  write_csv(ds, path);
  EXPECT_EQ(load_csv(path), ds);
}

TEST(Importance, FileRoundTripAndValidation) {
  const auto path = std::filesystem::temp_directory_path() / "qvc_test_importance.txt";
  write_importance({"b", "a"}, path);
  EXPECT_EQ(read_importance(path), (std::vector<std::string>{"b", "a"}));
  auto ds = hand_table();
  set_importance(ds, {"c", "a"});
  EXPECT_EQ(select_top_k(ds, 2).feature_names, (std::vector<std::string>{"c", "a"}));
  EXPECT_THROW(set_importance(ds, {"zz"}), ConfigError);
  EXPECT_THROW(set_importance(ds, {"a", "a"}), ConfigError);
}

TEST(RankFeatures, HandTable) {
  const auto scores = feature_scores(hand_table());
  ASSERT_EQ(scores.size(), 4u);
  EXPECT_EQ(scores[0].name, "b");
  EXPECT_NEAR(scores[0].score, 0.8269767696299568, 1e-12);
  EXPECT_EQ(scores[1].name, "c");
  EXPECT_NEAR(scores[1].score, 0.7276068751089989, 1e-12);
  EXPECT_EQ(scores[2].name, "a");
  EXPECT_NEAR(scores[2].score, 0.29277002188455997, 1e-12);
  EXPECT_EQ(scores[3].name, "d");
  EXPECT_EQ(scores[3].score, 0.0);
}

TEST(RankFeatures, LabelCopyRanksFirstAndTiesKeepColumnOrder) {
  const auto ds = parse_csv("n1,n2,copy,label\n0,5,1,1\n0,5,0,0\n0,5,1,1\n0,5,0,0\n");
  EXPECT_EQ(rank_features(ds), (std::vector<std::string>{"copy", "n1", "n2"}));
}

TEST(RankFeatures, InvariantUnderPositiveAffineRescale) {
  auto ds = generate_synthetic(200, 6, 1.0, 8);
  const auto before = rank_features(ds);
  for (std::size_t i = 0; i < ds.num_rows(); ++i) {
    ds.values[i * 6 + 2] = 7.5 * ds.values[i * 6 + 2] - 40.0;
    ds.values[i * 6 + 4] = 0.01 * ds.values[i * 6 + 4] + 3.0;
  }
  EXPECT_EQ(rank_features(ds), before);
}

TEST(SelectTopK, IdentityOneAndErrors) {
  auto ds = hand_table();
  ds.importance_order = rank_features(ds);
  const auto all = select_top_k(ds, 4);
  EXPECT_EQ(all.feature_names, (std::vector<std::string>{"b", "c", "a", "d"}));
  EXPECT_EQ(all.at(0, 0), 10.0);
  EXPECT_EQ(select_top_k(ds, 1).feature_names, (std::vector<std::string>{"b"}));
  EXPECT_THROW(select_top_k(ds, 5), ConfigError);
  EXPECT_THROW(select_top_k(ds, 0), ConfigError);
}

TEST(SelectTopK, NestedPrefixes) {
  const auto ds = generate_synthetic(100, 8, 2.0, 4);
  for (int k1 = 1; k1 < 8; ++k1) {
    const auto small = select_top_k(ds, k1).feature_names;
    const auto big = select_top_k(ds, k1 + 1).feature_names;
    EXPECT_TRUE(std::equal(small.begin(), small.end(), big.begin()));
  }
}

TEST(SelectTopK, SyntheticMatchesManualSelection) {
  const auto ds = generate_synthetic(100, 8, 3.0, 21);
  const auto top = select_top_k(ds, 4);
  const auto& order = *ds.importance_order;
  for (std::size_t c = 0; c < 4; ++c) {
    const auto col = static_cast<std::size_t>(std::stoi(order[c].substr(1)));
    EXPECT_LT(col, 4u);
    for (std::size_t i = 0; i < ds.num_rows(); ++i) ASSERT_EQ(top.at(i, c), ds.at(i, col));
  }
}

TEST(Scaling, EndpointsMidpointAndClamp) {
  const auto train = parse_csv("x,label\n2,1\n6,0\n4,1\n");
  const auto spec = fit_scaling(train, 0.0, kPiD);
  EXPECT_DOUBLE_EQ(apply_scaling(spec, std::vector<double>{2.0})[0], 0.0);
  EXPECT_DOUBLE_EQ(apply_scaling(spec, std::vector<double>{6.0})[0], kPiD);
  EXPECT_DOUBLE_EQ(apply_scaling(spec, std::vector<double>{4.0})[0], kPiD / 2);
  EXPECT_DOUBLE_EQ(apply_scaling(spec, std::vector<double>{-100.0})[0], 0.0);
  EXPECT_DOUBLE_EQ(apply_scaling(spec, std::vector<double>{100.0})[0], kPiD);
  EXPECT_THROW(apply_scaling(spec, std::vector<double>{1.0, 2.0}), UsageError);
}

TEST(Scaling, DefaultRangeAndConstantColumn) {
  const auto train = parse_csv("x,c,label\n2,5,1\n6,5,0\n");
  const auto spec = fit_scaling(train);
  EXPECT_EQ(spec.lower, 0.0);
  EXPECT_EQ(spec.upper, kPiD);
  EXPECT_EQ(apply_scaling(spec, std::vector<double>{3.0, 9.0})[1], 0.0);
  const auto shifted = fit_scaling(train, kPiD / 2, kPiD);
  EXPECT_DOUBLE_EQ(apply_scaling(shifted, std::vector<double>{4.0, 5.0})[0], 0.75 * kPiD);
  EXPECT_EQ(apply_scaling(shifted, std::vector<double>{4.0, 5.0})[1], kPiD / 2);
}

TEST(Scaling, OutputsAlwaysInRange) {
  const auto train = generate_synthetic(100, 5, 2.0, 1);
  const auto test = generate_synthetic(300, 5, 2.0, 2);
  const auto spec = fit_scaling(train);
  for (std::size_t i = 0; i < test.num_rows(); ++i) {
    for (double v : apply_scaling(spec, test.row(i))) {
      EXPECT_GE(v, 0.0);
      EXPECT_LE(v, kPiD);
    }
  }
}

TEST(Synthetic, DeterministicAndBalanced) {
  const auto a = generate_synthetic(101, 6, 2.0, 77);
  EXPECT_EQ(a, generate_synthetic(101, 6, 2.0, 77));
  EXPECT_NE(a, generate_synthetic(101, 6, 2.0, 78));
  const auto valid = std::count(a.labels.begin(), a.labels.end(), Label::Valid);
  EXPECT_EQ(valid, 50);
  EXPECT_THROW(generate_synthetic(1, 6, 2.0, 0), UsageError);
  EXPECT_THROW(generate_synthetic(10, 1, 2.0, 0), UsageError);
}

TEST(Synthetic, ZeroSeparationIsUncorrelated) {
  const auto ds = generate_synthetic(1000, 8, 0.0, 5);
  for (const auto& s : feature_scores(ds)) EXPECT_LT(s.score, 0.1) << s.name;
}

TEST(Synthetic, SeparatedClassesAreThresholdable) {
  const auto ds = generate_synthetic(1000, 8, 4.0, 6);
  const auto& first = ds.importance_order->front();
  const auto col = static_cast<std::size_t>(std::stoi(first.substr(1)));
  EXPECT_GE(threshold_accuracy(ds, col), 0.95);
}

TEST(Synthetic, InformativeFeaturesRankAboveNoise) {
  const auto ds = generate_synthetic(2000, 8, 3.0, 9);
  const auto ranked = rank_features(ds);
  for (int i = 0; i < 4; ++i) EXPECT_LT(std::stoi(ranked[i].substr(1)), 4);
}

TEST(SplitRows, PartitionsInOrder) {
  const auto ds = generate_synthetic(10, 3, 1.0, 2);
  const auto [a, b] = split_rows(ds, 7);
  EXPECT_EQ(a.num_rows(), 7u);
  EXPECT_EQ(b.num_rows(), 3u);
  EXPECT_EQ(b.at(0, 0), ds.at(7, 0));
  EXPECT_THROW(split_rows(ds, 11), UsageError);
}
