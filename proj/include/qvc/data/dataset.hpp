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

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qvc::data {

/// Class label. Valid means the request would have produced a 200 response.
enum class Label : std::uint8_t { Invalid = 0, Valid = 1 };

/// Training target for squared-error loss: +1 valid, -1 invalid.
constexpr double target_of(Label label) noexcept { return label == Label::Valid ? 1.0 : -1.0; }

/// Feature matrix with labels. Rows are stored row-major in `values`.
struct Dataset {
  std::vector<std::string> feature_names;
  std::vector<double> values;
  std::vector<Label> labels;
  /// Most important first. A permutation of a subset of feature_names.
  std::optional<std::vector<std::string>> importance_order;

  std::size_t num_rows() const noexcept { return labels.size(); }
  std::size_t num_features() const noexcept { return feature_names.size(); }
  std::span<const double> row(std::size_t i) const {
    return {values.data() + i * num_features(), num_features()};
  }
  double at(std::size_t i, std::size_t j) const { return values[i * num_features() + j]; }

  /// Throws UsageError when the shape or importance invariants are broken.
  void validate() const;

  friend bool operator==(const Dataset&, const Dataset&) = default;
};

/// Reads a headered CSV with a `label` column (1 valid, 0 invalid); every
/// other column must be a finite number. Throws LoadError naming the row
/// and column of the first offending cell.
Dataset load_csv(const std::filesystem::path& path);
Dataset parse_csv(std::string_view text, const std::string& source_name = "<memory>");

/// Writes `ds` with the label as the last column. Values use shortest
/// round-trip formatting so load_csv(write_csv(ds)) == ds.
void write_csv(const Dataset& ds, const std::filesystem::path& path);
std::string format_csv(const Dataset& ds);

/// One feature name per line, most important first. Blank lines and
/// surrounding whitespace are ignored.
std::vector<std::string> read_importance(const std::filesystem::path& path);
void write_importance(const std::vector<std::string>& order, const std::filesystem::path& path);

/// Attaches an importance order after checking that it names known features
/// without duplicates. Throws ConfigError otherwise.
void set_importance(Dataset& ds, std::vector<std::string> order);

struct FeatureScore {
  std::string name;
  double score = 0.0;  // |point-biserial correlation| with the label
};

/// Features sorted by descending score, ties in column order.
std::vector<FeatureScore> feature_scores(const Dataset& ds);
std::vector<std::string> rank_features(const Dataset& ds);

/// Restricts `ds` to the named columns in the given order. Throws
/// ConfigError listing any names the dataset lacks.
Dataset select_features(const Dataset& ds, const std::vector<std::string>& names);

/// First k features of the importance order (rank_features when the dataset
/// carries none). Throws ConfigError when k is out of range.
Dataset select_top_k(const Dataset& ds, int k);

/// Splits rows [0, n_first) and [n_first, m). Throws UsageError if n_first > m.
std::pair<Dataset, Dataset> split_rows(const Dataset& ds, std::size_t n_first);

/// Per-feature affine map of the training range onto [lower, upper].
struct ScalingSpec {
  double lower = 0.0;
  double upper = 0.0;
  std::vector<double> min;
  std::vector<double> max;

  friend bool operator==(const ScalingSpec&, const ScalingSpec&) = default;
};

inline constexpr double kPi = 3.14159265358979323846;

/// Observed per-column bounds of `train`, mapped to [lower, upper].
ScalingSpec fit_scaling(const Dataset& train, double lower = 0.0, double upper = kPi);

/// Scales one raw row; out-of-range values are clamped, constant columns
/// map to `lower`. Throws UsageError on a width mismatch.
std::vector<double> apply_scaling(const ScalingSpec& spec, std::span<const double> row);

struct SyntheticOptions {
  /// Fraction of columns that carry class signal; the rest are pure noise.
  double informative_fraction = 0.5;
};

/// Two unit-variance Gaussian clusters whose means differ by
/// `class_separation` along a random direction in the informative
/// subspace. Balanced labels, deterministic in `seed`; importance_order
/// lists informative columns (largest direction weight first) before noise.
Dataset generate_synthetic(int num_rows, int num_features, double class_separation, std::uint64_t seed,
                           const SyntheticOptions& options = {});

}  // namespace qvc::data
