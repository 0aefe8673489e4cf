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

#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qvc/sweep/records.hpp"

namespace qvc::stats {

struct AnovaTest {
  double f_statistic = 0.0;
  double p_value = 1.0;
  double ss_between = 0.0;
  double ss_within = 0.0;
  int df_between = 0;
  int df_within = 0;
};

/// Classic one-way ANOVA. Needs at least two non-empty groups and at least
/// two within-group degrees of freedom (UsageError otherwise). All-equal
/// observations give F = 0, p = 1; zero within-group spread with distinct
/// group means gives F = inf, p = 0.
AnovaTest one_way_anova(const std::vector<std::vector<double>>& groups);

enum class Hyperparameter { NumFeat, NumRep, Entangle, Ansatz };

inline constexpr std::array<Hyperparameter, 4> kAllHyperparameters = {
    Hyperparameter::NumFeat, Hyperparameter::NumRep, Hyperparameter::Entangle, Hyperparameter::Ansatz};

std::string_view name(Hyperparameter hp) noexcept;
std::optional<Hyperparameter> parse_hyperparameter(std::string_view text) noexcept;

/// A hyperparameter value: integers for num_feat/num_rep, codes otherwise.
using HpValue = std::variant<int, std::string>;
HpValue value_of(const sweep::RunRecord& record, Hyperparameter hp);
std::string to_string(const HpValue& value);

struct AnovaResult {
  Hyperparameter hyperparameter = Hyperparameter::NumFeat;
  double f_statistic = 0.0;
  double p_value = 1.0;
  int group_count = 0;
  int total_observations = 0;
  bool significant() const noexcept { return p_value < 0.05; }
};

/// Groups test accuracy by each hyperparameter, pooling everything else.
/// Sorted by descending F. Single-valued hyperparameters are omitted and a
/// message is appended to `warnings` when given.
std::vector<AnovaResult> anova_per_hyperparameter(const std::vector<sweep::RunRecord>& records,
                                                  std::vector<std::string>* warnings = nullptr);

struct SummaryRow {
  std::vector<HpValue> key;
  double avg_accuracy = 0.0;
  int n_records = 0;
};

/// Mean test accuracy per key tuple, best first; ties resolved by key order.
/// Throws UsageError when `keys` is empty.
std::vector<SummaryRow> rank_combinations(const std::vector<sweep::RunRecord>& records,
                                          const std::vector<Hyperparameter>& keys);

struct BoxStats {
  HpValue key;
  double min = 0.0, q1 = 0.0, median = 0.0, q3 = 0.0, max = 0.0, mean = 0.0;
  int n = 0;
};

/// Five-number summary plus mean of test accuracy per value of `hp`.
/// Quartiles interpolate linearly between order statistics.
std::vector<BoxStats> box_statistics(const std::vector<sweep::RunRecord>& records, Hyperparameter hp);

}  // namespace qvc::stats
