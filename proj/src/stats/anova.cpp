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

#include "qvc/stats/anova.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "qvc/error.hpp"
#include "qvc/stats/distributions.hpp"

namespace qvc::stats {

AnovaTest one_way_anova(const std::vector<std::vector<double>>& groups) {
  if (groups.size() < 2) throw UsageError("ANOVA needs at least two groups");
  std::size_t total = 0;
  double sum = 0.0, sum_sq = 0.0;
  for (const auto& g : groups) {
    if (g.empty()) throw UsageError("ANOVA groups must be non-empty");
    total += g.size();
    for (double x : g) {
      sum += x;
      sum_sq += x * x;
    }
  }
  AnovaTest t;
  t.df_between = static_cast<int>(groups.size()) - 1;
  t.df_within = static_cast<int>(total - groups.size());
  if (t.df_within < 2) throw UsageError("ANOVA needs at least two within-group degrees of freedom");

  const double grand = sum / static_cast<double>(total);
  for (const auto& g : groups) {
    double gs = 0.0;
    for (double x : g) gs += x;
    const double mean = gs / static_cast<double>(g.size());
    t.ss_between += static_cast<double>(g.size()) * (mean - grand) * (mean - grand);
    for (double x : g) t.ss_within += (x - mean) * (x - mean);
  }

  // Spread at the level of rounding noise counts as none.
  const double noise = 1e-26 * (sum_sq + std::numeric_limits<double>::min());
  const bool no_between = t.ss_between <= noise;
  const bool no_within = t.ss_within <= noise;
  if (no_between) {
    t.ss_between = 0.0;
    t.f_statistic = 0.0;
    t.p_value = 1.0;
    return t;
  }
  if (no_within) {
    t.ss_within = 0.0;
    t.f_statistic = std::numeric_limits<double>::infinity();
    t.p_value = 0.0;
    return t;
  }
  t.f_statistic = (t.ss_between / t.df_between) / (t.ss_within / t.df_within);
  t.p_value = f_survival(t.f_statistic, t.df_between, t.df_within);
  return t;
}

std::string_view name(Hyperparameter hp) noexcept {
  switch (hp) {
    case Hyperparameter::NumFeat:
      return "num_feat";
    case Hyperparameter::NumRep:
      return "num_rep";
    case Hyperparameter::Entangle:
      return "entangle";
    case Hyperparameter::Ansatz:
      return "ansatz";
  }
  return "?";
}

std::optional<Hyperparameter> parse_hyperparameter(std::string_view text) noexcept {
  for (auto hp : kAllHyperparameters) {
    if (name(hp) == text) return hp;
  }
  return std::nullopt;
}

HpValue value_of(const sweep::RunRecord& r, Hyperparameter hp) {
  switch (hp) {
    case Hyperparameter::NumFeat:
      return r.config.num_feat;
    case Hyperparameter::NumRep:
      return r.config.num_rep;
    case Hyperparameter::Entangle:
      return std::string(circuit::code(r.config.entangle));
    case Hyperparameter::Ansatz:
      return std::string(circuit::code(r.config.ansatz));
  }
  return 0;
}

std::string to_string(const HpValue& value) {
  return std::visit(
      [](const auto& v) -> std::string {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, int>) {
          return std::to_string(v);
        } else {
          return v;
        }
      },
      value);
}

namespace {

std::map<HpValue, std::vector<double>> group_by(const std::vector<sweep::RunRecord>& records, Hyperparameter hp) {
  std::map<HpValue, std::vector<double>> groups;
  for (const auto& r : records) groups[value_of(r, hp)].push_back(r.test_accuracy);
  return groups;
}

double quantile(const std::vector<double>& sorted, double q) {
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

}  // namespace

std::vector<AnovaResult> anova_per_hyperparameter(const std::vector<sweep::RunRecord>& records,
                                                  std::vector<std::string>* warnings) {
  std::vector<AnovaResult> results;
  for (auto hp : kAllHyperparameters) {
    const auto groups = group_by(records, hp);
    if (groups.size() < 2) {
      if (warnings) {
        warnings->push_back("hyperparameter " + std::string(name(hp)) +
                            " takes a single value; omitted from ANOVA");
      }
      continue;
    }
    std::vector<std::vector<double>> data;
    for (const auto& [key, values] : groups) data.push_back(values);
    AnovaResult res;
    res.hyperparameter = hp;
    res.group_count = static_cast<int>(data.size());
    res.total_observations = static_cast<int>(records.size());
    try {
      const auto t = one_way_anova(data);
      res.f_statistic = t.f_statistic;
      res.p_value = t.p_value;
    } catch (const UsageError& e) {
      if (warnings) warnings->push_back(std::string(name(hp)) + ": " + e.what() + "; omitted from ANOVA");
      continue;
    }
    results.push_back(res);
  }
  std::stable_sort(results.begin(), results.end(),
                   [](const AnovaResult& a, const AnovaResult& b) { return a.f_statistic > b.f_statistic; });
  return results;
}

std::vector<SummaryRow> rank_combinations(const std::vector<sweep::RunRecord>& records,
                                          const std::vector<Hyperparameter>& keys) {
  if (keys.empty()) throw UsageError("rank_combinations needs at least one key");
  std::map<std::vector<HpValue>, std::pair<double, int>> cells;
  for (const auto& r : records) {
    std::vector<HpValue> key;
    for (auto hp : keys) key.push_back(value_of(r, hp));
    auto& cell = cells[key];
    cell.first += r.test_accuracy;
    cell.second += 1;
  }
  std::vector<SummaryRow> rows;
  for (const auto& [key, cell] : cells) rows.push_back({key, cell.first / cell.second, cell.second});
  std::stable_sort(rows.begin(), rows.end(),
                   [](const SummaryRow& a, const SummaryRow& b) { return a.avg_accuracy > b.avg_accuracy; });
  return rows;
}

std::vector<BoxStats> box_statistics(const std::vector<sweep::RunRecord>& records, Hyperparameter hp) {
  std::vector<BoxStats> out;
  for (auto& [key, values] : group_by(records, hp)) {
    std::sort(values.begin(), values.end());
    BoxStats b;
    b.key = key;
    b.n = static_cast<int>(values.size());
    b.min = values.front();
    b.max = values.back();
    b.q1 = quantile(values, 0.25);
    b.median = quantile(values, 0.5);
    b.q3 = quantile(values, 0.75);
    double s = 0.0;
    for (double v : values) s += v;
    b.mean = s / b.n;
    out.push_back(std::move(b));
  }
  return out;
}

}  // namespace qvc::stats
