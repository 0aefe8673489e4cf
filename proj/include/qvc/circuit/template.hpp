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
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "qvc/sim/gate.hpp"
#include "json.hpp"

namespace qvc::circuit {

/// Angle sources a template gate can reference.
struct NoAngle {
  friend bool operator==(const NoAngle&, const NoAngle&) = default;
};
struct FixedAngle {
  double value = 0.0;
  friend bool operator==(const FixedAngle&, const FixedAngle&) = default;
};
/// scale * v[slot]
struct FeatureAngle {
  int slot = 0;
  double scale = 1.0;
  friend bool operator==(const FeatureAngle&, const FeatureAngle&) = default;
};
/// scale * (pi - v[i]) * (pi - v[j])
struct FeaturePairAngle {
  int first = 0;
  int second = 0;
  double scale = 1.0;
  friend bool operator==(const FeaturePairAngle&, const FeaturePairAngle&) = default;
};
/// theta[slot]
struct TrainableAngle {
  int slot = 0;
  friend bool operator==(const TrainableAngle&, const TrainableAngle&) = default;
};

using AngleRef = std::variant<NoAngle, FixedAngle, FeatureAngle, FeaturePairAngle, TrainableAngle>;

struct TemplateGate {
  sim::GateKind kind = sim::GateKind::H;
  std::array<int, 2> qubits{0, 0};
  AngleRef angle;
  friend bool operator==(const TemplateGate&, const TemplateGate&) = default;
};

/// The pairwise feature expression of the ZZ feature map.
double zz_phi(double first, double second) noexcept;

/// Gate list with symbolic parameter slots. Feature-map templates reference
/// feature slots only; ansatz templates reference trainable slots only.
struct CircuitTemplate {
  int num_qubits = 0;
  std::vector<TemplateGate> gates;
  int num_trainable = 0;
  int num_feature_slots = 0;

  /// Checks qubit ranges, angle/kind agreement, slot ranges, that every
  /// trainable slot is referenced and that feature and trainable slots are
  /// not mixed. Throws ConfigError.
  void validate() const;

  /// Number of distinct trainable slots referenced by the gates.
  int count_distinct_trainable() const;

  friend bool operator==(const CircuitTemplate&, const CircuitTemplate&) = default;
};

/// Resolves every slot reference into a concrete gate list. Throws
/// UsageError when the vector lengths do not match the slot counts.
std::vector<sim::GateInstance> bind(const CircuitTemplate& tmpl, std::span<const double> features,
                                    std::span<const double> theta);

/// JSON form: {"num_qubits", "num_trainable", "num_feature_slots", "gates": [
///   {"kind", "qubits", "angle" | "feature_slot"+"scale" | "phi":[i,j]+"scale" | "theta_slot"}]}
nlohmann::json to_json(const CircuitTemplate& tmpl);
CircuitTemplate template_from_json(const nlohmann::json& doc);

/// Aligned ASCII rendering, one row per qubit.
std::string render_ascii(const CircuitTemplate& tmpl);

}  // namespace qvc::circuit
