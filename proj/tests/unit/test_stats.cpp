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

#include <cmath>
#include <limits>
#include <algorithm>
#include <functional>
#include <random>

#include "qvc/error.hpp"
#include "qvc/stats/anova.hpp"
#include "qvc/stats/distributions.hpp"
#include "quadrature.hpp"

using namespace qvc;
using namespace qvc::stats;
using circuit::AnsatzKind;
using circuit::EntanglementKind;

namespace {

std::vector<sweep::RunRecord> grid_records(const std::function<double(const sweep::ModelConfig&, int)>& acc,
                                           int runs = 3) {
  std::vector<sweep::RunRecord> out;
  for (int nf : {4, 5, 6})
    for (int nr : {1, 3})
      for (auto e : {EntanglementKind::Full, EntanglementKind::Linear})
        for (auto a : {AnsatzKind::RealAmplitudes, AnsatzKind::ExcitationPreservingIswap})
          for (int run = 0; run < runs; ++run) {
            sweep::RunRecord r;
            r.config = {nf, nr, e, a};
            r.run = run;
            r.test_accuracy = acc(r.config, run);
            out.push_back(r);
          }
  return out;
}

}  // namespace

TEST(Distributions, IncompleteBetaKnownValues) {
  EXPECT_EQ(regularized_incomplete_beta(2, 3, 0), 0.0);
  EXPECT_EQ(regularized_incomplete_beta(2, 3, 1), 1.0);
  // I_x(1, 1) = x and I_x(a, 1) = x^a.
  EXPECT_NEAR(regularized_incomplete_beta(1, 1, 0.37), 0.37, 1e-15);
  EXPECT_NEAR(regularized_incomplete_beta(3.5, 1, 0.6), std::pow(0.6, 3.5), 1e-14);
  // Frozen from an independent statistics library.
  EXPECT_NEAR(regularized_incomplete_beta(2.5, 0.5, 0.3), 0.018927124071945658, 1e-13);
  EXPECT_THROW(regularized_incomplete_beta(0, 1, 0.5), UsageError);
  EXPECT_THROW(regularized_incomplete_beta(1, 1, 1.5), UsageError);
}

TEST(Distributions, FSurvivalReference) {
  EXPECT_NEAR(f_survival(1.5, 1, 4), 0.288, 0.001);
  EXPECT_NEAR(f_survival(1.5, 1, 4), 0.2878641347266907, 1e-12);
  EXPECT_NEAR(f_cdf(2.0, 3, 10), 0.8219925926248246, 1e-12);
  EXPECT_EQ(f_survival(0.0, 2, 5), 1.0);
  EXPECT_EQ(f_survival(std::numeric_limits<double>::infinity(), 2, 5), 0.0);
}

TEST(Distributions, MatchesQuadratureOracleOnTwentyPoints) {
  const double table[20][3] = {
      {0.1, 1, 4},  {0.5, 1, 4},  {1.5, 1, 4},   {4.0, 1, 4},    {0.2, 2, 7},   {1.0, 2, 7},   {3.3, 2, 7},
      {0.7, 3, 10}, {2.0, 3, 10}, {5.0, 3, 10},  {0.9, 4, 20},   {1.8, 4, 20},  {0.3, 5, 3},   {2.5, 5, 3},
      {1.2, 7, 45}, {3.0, 7, 45}, {0.8, 24, 500}, {1.4, 24, 500}, {1.1, 1, 1999}, {20.0, 4, 4995}};
  for (const auto& row : table) {
    const double oracle = qvc::testing::f_cdf_by_quadrature(row[0], row[1], row[2]);
    EXPECT_NEAR(f_cdf(row[0], row[1], row[2]), oracle, 1e-8) << row[0] << " " << row[1] << " " << row[2];
    EXPECT_NEAR(f_survival(row[0], row[1], row[2]), 1.0 - oracle, 1e-8);
  }
}

TEST(Distributions, SurvivalMonotoneInF) {
  for (double d1 : {1.0, 3.0, 7.0}) {
    double prev = 1.0;
    for (double f = 0.05; f < 30.0; f *= 1.3) {
      const double p = f_survival(f, d1, 40);
      EXPECT_LT(p, prev);
      prev = p;
    }
  }
}

TEST(OneWayAnova, HandComputedFixture) {
  const auto t = one_way_anova({{1, 2, 3}, {2, 3, 4}});
  EXPECT_DOUBLE_EQ(t.ss_between, 1.5);
  EXPECT_DOUBLE_EQ(t.ss_within, 4.0);
  EXPECT_EQ(t.df_between, 1);
  EXPECT_EQ(t.df_within, 4);
  EXPECT_DOUBLE_EQ(t.f_statistic, 1.5);
  EXPECT_NEAR(t.p_value, 0.288, 0.001);
}

TEST(OneWayAnova, DegenerateCases) {
  const auto same = one_way_anova({{0.1, 0.1, 0.1}, {0.1, 0.1, 0.1}});
  EXPECT_EQ(same.f_statistic, 0.0);
  EXPECT_EQ(same.p_value, 1.0);
  const auto separated = one_way_anova({{1, 1}, {2, 2}});
  EXPECT_TRUE(std::isinf(separated.f_statistic));
  EXPECT_EQ(separated.p_value, 0.0);
  EXPECT_THROW(one_way_anova({{1, 2, 3}}), UsageError);
  EXPECT_THROW(one_way_anova({{1}, {2}}), UsageError);
  EXPECT_THROW(one_way_anova({{1, 2}, {}}), UsageError);
}

TEST(OneWayAnova, ShiftAndScaleInvariant) {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> n(0.7, 0.1);
  std::vector<std::vector<double>> g(4, std::vector<double>(9));
  for (std::size_t i = 0; i < g.size(); ++i)
    for (auto& x : g[i]) x = n(rng) + 0.02 * static_cast<double>(i);
  const double base = one_way_anova(g).f_statistic;
  auto shifted = g, scaled = g;
  for (auto& grp : shifted)
    for (auto& x : grp) x += 12.5;
  for (auto& grp : scaled)
    for (auto& x : grp) x *= 3.7;
  EXPECT_NEAR(one_way_anova(shifted).f_statistic, base, 1e-9 * base);
  EXPECT_NEAR(one_way_anova(scaled).f_statistic, base, 1e-9 * base);
}

TEST(AnovaPerHyperparameter, DominantFactor) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> noise(0.0, 0.002);
  const auto records = grid_records([&](const sweep::ModelConfig& c, int) { return 0.5 + 0.1 * c.num_feat + noise(rng); });
  const auto res = anova_per_hyperparameter(records);
  ASSERT_EQ(res.size(), 4u);
  EXPECT_EQ(res[0].hyperparameter, Hyperparameter::NumFeat);
  EXPECT_LT(res[0].p_value, 0.05);
  EXPECT_TRUE(res[0].significant());
  EXPECT_GT(res[0].f_statistic, 100 * res[1].f_statistic);
  EXPECT_EQ(res[0].group_count, 3);
  EXPECT_EQ(res[0].total_observations, static_cast<int>(records.size()));
  for (std::size_t i = 1; i < res.size(); ++i) EXPECT_GE(res[i - 1].f_statistic, res[i].f_statistic);
}

TEST(AnovaPerHyperparameter, NullHypothesisFalsePositiveRate) {
  // Each factor's test should reject at the nominal 5% rate.
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.6, 0.9);
  std::array<int, 4> accepted{};
  for (int draw = 0; draw < 100; ++draw) {
    const auto records = grid_records([&](const sweep::ModelConfig&, int) { return u(rng); });
    for (const auto& r : anova_per_hyperparameter(records)) {
      accepted[static_cast<std::size_t>(r.hyperparameter)] += r.p_value > 0.05;
    }
  }
  for (int a : accepted) EXPECT_GE(a, 90);
}

TEST(AnovaPerHyperparameter, SingleValuedOmittedWithWarning) {
  auto records = grid_records([](const sweep::ModelConfig& c, int run) { return 0.1 * c.num_rep + 0.01 * run; });
  for (auto& r : records) r.config.ansatz = AnsatzKind::RealAmplitudes;
  std::vector<std::string> warnings;
  const auto res = anova_per_hyperparameter(records, &warnings);
  EXPECT_EQ(res.size(), 3u);
  ASSERT_EQ(warnings.size(), 1u);
  EXPECT_NE(warnings[0].find("ansatz"), std::string::npos);
}

TEST(RankCombinations, DominantCellFirst) {
  const auto records = grid_records([](const sweep::ModelConfig& c, int) {
    return c.num_feat == 5 && c.num_rep == 3 && c.entangle == EntanglementKind::Linear &&
                   c.ansatz == AnsatzKind::ExcitationPreservingIswap
               ? 0.95
               : 0.6;
  });
  const std::vector<Hyperparameter> all(kAllHyperparameters.begin(), kAllHyperparameters.end());
  const auto rows = rank_combinations(records, all);
  ASSERT_FALSE(rows.empty());
  EXPECT_EQ(rows[0].key, (std::vector<HpValue>{5, 3, std::string("ln"), std::string("ep_is")}));
  EXPECT_DOUBLE_EQ(rows[0].avg_accuracy, 0.95);
  EXPECT_EQ(rows[0].n_records, 3);
  // Ties keep key order.
  EXPECT_EQ(rows[1].key, (std::vector<HpValue>{4, 1, std::string("fl"), std::string("ep_is")}));
  EXPECT_THROW(rank_combinations(records, {}), UsageError);
}

TEST(RankCombinations, SingleRecordAndRunsOneIdentity) {
  sweep::RunRecord r;
  r.test_accuracy = 0.8125;
  const auto rows = rank_combinations({r}, {Hyperparameter::NumRep});
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].avg_accuracy, 0.8125);

  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0, 1);
  const auto records = grid_records([&](const sweep::ModelConfig&, int) { return u(rng); }, 1);
  const std::vector<Hyperparameter> all(kAllHyperparameters.begin(), kAllHyperparameters.end());
  const auto full = rank_combinations(records, all);
  ASSERT_EQ(full.size(), records.size());
  for (const auto& row : full) {
    EXPECT_EQ(row.n_records, 1);
    const auto it = std::find_if(records.begin(), records.end(), [&](const sweep::RunRecord& rec) {
      std::vector<HpValue> key;
      for (auto hp : kAllHyperparameters) key.push_back(value_of(rec, hp));
      return key == row.key;
    });
    ASSERT_NE(it, records.end());
    EXPECT_EQ(row.avg_accuracy, it->test_accuracy);
  }
}

TEST(BoxStatistics, FiveNumberSummary) {
  std::vector<sweep::RunRecord> records;
  for (double a : {0.1, 0.2, 0.3, 0.4, 0.5}) {
    sweep::RunRecord r;
    r.test_accuracy = a;
    records.push_back(r);
  }
  const auto box = box_statistics(records, Hyperparameter::NumFeat);
  ASSERT_EQ(box.size(), 1u);
  EXPECT_DOUBLE_EQ(box[0].min, 0.1);
  EXPECT_DOUBLE_EQ(box[0].q1, 0.2);
  EXPECT_DOUBLE_EQ(box[0].median, 0.3);
  EXPECT_DOUBLE_EQ(box[0].q3, 0.4);
  EXPECT_DOUBLE_EQ(box[0].max, 0.5);
  EXPECT_DOUBLE_EQ(box[0].mean, 0.3);
  EXPECT_EQ(box[0].n, 5);
}

TEST(Hyperparameters, NamesRoundTrip) {
  for (auto hp : kAllHyperparameters) EXPECT_EQ(parse_hyperparameter(name(hp)), hp);
  EXPECT_EQ(to_string(HpValue{7}), "7");
  EXPECT_EQ(to_string(HpValue{std::string("sca")}), "sca");
}
