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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "qvc/circuit/builders.hpp"
#include "qvc/data/dataset.hpp"
#include "qvc/sim/state.hpp"

namespace qvc::model {

/// How per-qubit <Z> values become one score in [-1, 1].
enum class Decoding {
  Mean,    // arithmetic mean of <Z_q>
  Parity,  // <Z x Z x ... x Z>
  Qubit0,  // <Z_0> alone
};

std::string_view code(Decoding decoding) noexcept;
std::optional<Decoding> parse_decoding(std::string_view text) noexcept;

/// Architecture of a model built from the standard families.
struct ModelSpec {
  circuit::AnsatzKind ansatz = circuit::AnsatzKind::RealAmplitudes;
  /// Entanglement label. For ptd the layout is always pairwise; the label
  /// is kept for bookkeeping only.
  circuit::EntanglementKind entangle = circuit::EntanglementKind::Full;
  int num_rep = 1;
  int num_qubits = 2;
  std::uint64_t rng_seed = 0;
  Decoding decoding = Decoding::Mean;

  /// Entanglement actually used to build the ansatz.
  circuit::EntanglementKind layout() const noexcept;
  friend bool operator==(const ModelSpec&, const ModelSpec&) = default;
};

struct Prediction {
  std::vector<double> per_qubit_z;
  double score = 0.0;
  data::Label label = data::Label::Valid;
};

/// Feature map + ansatz + readout. theta has one entry per trainable slot.
class QnnModel {
 public:
  /// ZZ feature map and the ansatz described by `spec`, with theta zeroed.
  static QnnModel build(const ModelSpec& spec, data::ScalingSpec scaling, std::vector<std::string> feature_names);

  /// Arbitrary templates; used for hand-built fixtures. Throws ConfigError
  /// when qubit counts or slot counts disagree.
  QnnModel(circuit::CircuitTemplate feature_map, circuit::CircuitTemplate ansatz, data::ScalingSpec scaling,
           std::vector<std::string> feature_names, Decoding decoding = Decoding::Mean);

  int num_qubits() const noexcept { return ansatz_.num_qubits; }
  int num_parameters() const noexcept { return ansatz_.num_trainable; }
  const circuit::CircuitTemplate& feature_map() const noexcept { return feature_map_; }
  const circuit::CircuitTemplate& ansatz() const noexcept { return ansatz_; }
  const data::ScalingSpec& scaling() const noexcept { return scaling_; }
  const std::vector<std::string>& feature_names() const noexcept { return feature_names_; }
  const std::optional<ModelSpec>& spec() const noexcept { return spec_; }
  Decoding decoding() const noexcept { return decoding_; }

  std::span<const double> theta() const noexcept { return theta_; }
  /// Throws UsageError on a length mismatch.
  void set_theta(std::vector<double> theta);

  /// Scales, encodes and measures one raw feature row.
  Prediction forward(std::span<const double> raw_features) const;
  Prediction forward(std::span<const double> raw_features, std::span<const double> theta) const;

  /// State after the feature map for an already-scaled row.
  sim::QuantumState encode(std::span<const double> scaled) const;
  /// Runs the ansatz on an encoded state and decodes it.
  Prediction readout(sim::QuantumState state, std::span<const sim::GateInstance> ansatz_gates) const;

  friend bool operator==(const QnnModel&, const QnnModel&) = default;

 private:
  QnnModel() = default;
  void check_invariants() const;

  circuit::CircuitTemplate feature_map_;
  circuit::CircuitTemplate ansatz_;
  data::ScalingSpec scaling_;
  std::vector<std::string> feature_names_;
  std::vector<double> theta_;
  Decoding decoding_ = Decoding::Mean;
  std::optional<ModelSpec> spec_;
};

/// Scores closer to zero than this are rounding noise from an exact tie and
/// are reported as 0.
inline constexpr double kScoreTieTolerance = 1e-12;

/// Label rule shared by every decoding: valid iff score >= 0.
constexpr data::Label label_of(double score) noexcept {
  return score >= 0.0 ? data::Label::Valid : data::Label::Invalid;
}

/// Mean squared error between scores and +/-1 targets. The dataset columns
/// must match the model's features in order. Throws UsageError on an empty
/// dataset or a theta length mismatch.
double loss(const QnnModel& model, const data::Dataset& ds, std::span<const double> theta);
double accuracy(const QnnModel& model, const data::Dataset& ds);

/// Loss over a fixed dataset with feature-map states cached per sample.
/// Evaluation is bit-identical to `loss`.
class CachedObjective {
 public:
  CachedObjective(const QnnModel& model, const data::Dataset& ds);
  double operator()(std::span<const double> theta) const;
  std::size_t num_samples() const noexcept { return states_.size(); }

 private:
  const QnnModel* model_;
  std::vector<sim::QuantumState> states_;
  std::vector<double> targets_;
};

/// Model persistence; theta and scaling round-trip bit-exactly. Requires a
/// model built from a ModelSpec.
nlohmann::json to_json(const QnnModel& model);
QnnModel model_from_json(const nlohmann::json& doc);
void save_model(const QnnModel& model, const std::filesystem::path& path);
QnnModel load_model(const std::filesystem::path& path);

}  // namespace qvc::model
