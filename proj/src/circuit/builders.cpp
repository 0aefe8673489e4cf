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

#include "qvc/circuit/builders.hpp"

#include <numbers>
#include <string>

#include "qvc/error.hpp"
#include "qvc/random.hpp"

namespace qvc::circuit {

using sim::GateKind;

namespace {

constexpr std::array<std::pair<AnsatzKind, std::string_view>, 5> kCodes = {{
    {AnsatzKind::RealAmplitudes, "ra"},
    {AnsatzKind::PauliTwoDesign, "ptd"},
    {AnsatzKind::EfficientSU2, "es"},
    {AnsatzKind::ExcitationPreservingIswap, "ep_is"},
    {AnsatzKind::ExcitationPreservingFsim, "ep_fs"},
}};

class Builder {
 public:
  explicit Builder(int num_qubits) { tmpl_.num_qubits = num_qubits; }

  void fixed(GateKind kind, int q, std::optional<double> angle = std::nullopt) {
    tmpl_.gates.push_back({kind, {q, q}, angle ? AngleRef{FixedAngle{*angle}} : AngleRef{NoAngle{}}});
  }
  void fixed2(GateKind kind, int a, int b) { tmpl_.gates.push_back({kind, {a, b}, NoAngle{}}); }
  int new_slot() { return tmpl_.num_trainable++; }
  void trainable(GateKind kind, int q, int slot) { tmpl_.gates.push_back({kind, {q, q}, TrainableAngle{slot}}); }
  void trainable2(GateKind kind, int a, int b, int slot) {
    tmpl_.gates.push_back({kind, {a, b}, TrainableAngle{slot}});
  }
  void gate(const TemplateGate& g) { tmpl_.gates.push_back(g); }
  void set_feature_slots(int count) { tmpl_.num_feature_slots = count; }
  CircuitTemplate finish() && {
    tmpl_.validate();
    return std::move(tmpl_);
  }

 private:
  CircuitTemplate tmpl_;
};

}  // namespace

std::string_view code(AnsatzKind kind) noexcept {
  for (const auto& [k, c] : kCodes) {
    if (k == kind) return c;
  }
  return "?";
}

std::optional<AnsatzKind> parse_ansatz(std::string_view text) noexcept {
  for (const auto& [k, c] : kCodes) {
    if (c == text) return k;
  }
  return std::nullopt;
}

CircuitTemplate build_zz_feature_map(int num_features) {
  if (num_features < 2 || num_features > 24) {
    throw ConfigError("ZZ feature map needs 2..24 features, got " + std::to_string(num_features));
  }
  Builder b(num_features);
  b.set_feature_slots(num_features);
  for (int q = 0; q < num_features; ++q) b.fixed(GateKind::H, q);
  for (int q = 0; q < num_features; ++q) b.gate({GateKind::P, {q, q}, FeatureAngle{q, 2.0}});
  for (const QubitPair& p : entanglement_pairs(EntanglementKind::Linear, num_features)) {
    b.fixed2(GateKind::CX, p.control, p.target);
    b.gate({GateKind::P, {p.target, p.target}, FeaturePairAngle{p.control, p.target, 2.0}});
    b.fixed2(GateKind::CX, p.control, p.target);
  }
  return std::move(b).finish();
}

CircuitTemplate build_ansatz(AnsatzKind kind, int num_qubits, int num_rep, EntanglementKind entangle,
                             std::uint64_t rng_seed, const AnsatzOptions& options) {
  if (num_qubits < 2) throw ConfigError("ansatz needs at least 2 qubits");
  if (num_qubits > 24) throw ConfigError("ansatz supports at most 24 qubits");
  if (num_rep < 1) throw ConfigError("num_rep must be >= 1");
  if (kind == AnsatzKind::PauliTwoDesign && entangle != EntanglementKind::Pairwise) {
    throw ConfigError("ptd only admits pairwise (pw) entanglement, got " + std::string(code(entangle)));
  }
  if (kind == AnsatzKind::EfficientSU2 && options.es_rotation_block.empty()) {
    throw ConfigError("es rotation block must contain at least one gate");
  }
  for (GateKind g : options.es_rotation_block) {
    if (sim::arity(g) != 1) throw ConfigError("es rotation block accepts single-qubit gates only");
  }

  Builder b(num_qubits);
  Rng rng(rng_seed);

  auto rotation_layer = [&] {
    for (int q = 0; q < num_qubits; ++q) {
      switch (kind) {
        case AnsatzKind::RealAmplitudes:
          b.trainable(GateKind::RY, q, b.new_slot());
          break;
        case AnsatzKind::PauliTwoDesign: {
          static constexpr GateKind kChoices[3] = {GateKind::RX, GateKind::RY, GateKind::RZ};
          b.trainable(kChoices[uniform_index(rng, 3)], q, b.new_slot());
          break;
        }
        case AnsatzKind::EfficientSU2:
          for (GateKind g : options.es_rotation_block) {
            if (sim::takes_angle(g)) {
              b.trainable(g, q, b.new_slot());
            } else {
              b.fixed(g, q);
            }
          }
          break;
        case AnsatzKind::ExcitationPreservingIswap:
        case AnsatzKind::ExcitationPreservingFsim:
          b.trainable(GateKind::RZ, q, b.new_slot());
          break;
      }
    }
  };

  auto entanglement_layer = [&](int rep) {
    for (const QubitPair& p : entanglement_pairs(entangle, num_qubits, rep)) {
      switch (kind) {
        case AnsatzKind::RealAmplitudes:
        case AnsatzKind::EfficientSU2:
          b.fixed2(GateKind::CX, p.control, p.target);
          break;
        case AnsatzKind::PauliTwoDesign:
          b.fixed2(GateKind::CZ, p.control, p.target);
          break;
        case AnsatzKind::ExcitationPreservingIswap:
        case AnsatzKind::ExcitationPreservingFsim: {
          const int shared = b.new_slot();
          b.trainable2(GateKind::RXX, p.control, p.target, shared);
          b.trainable2(GateKind::RYY, p.control, p.target, shared);
          if (kind == AnsatzKind::ExcitationPreservingFsim) {
            b.trainable2(GateKind::CPhase, p.control, p.target, b.new_slot());
          }
          break;
        }
      }
    }
  };

  if (kind == AnsatzKind::PauliTwoDesign) {
    for (int q = 0; q < num_qubits; ++q) b.fixed(GateKind::RY, q, std::numbers::pi / 4);
  }
  for (int rep = 0; rep < num_rep; ++rep) {
    rotation_layer();
    entanglement_layer(rep);
  }
  rotation_layer();
  return std::move(b).finish();
}

int expected_trainable_count(AnsatzKind kind, int num_qubits, int num_rep, EntanglementKind entangle) {
  const int rotations = (num_rep + 1) * num_qubits;
  const int pairs = static_cast<int>(entanglement_pairs(entangle, num_qubits, 0).size());
  switch (kind) {
    case AnsatzKind::RealAmplitudes:
    case AnsatzKind::PauliTwoDesign:
    case AnsatzKind::EfficientSU2:
      return rotations;
    case AnsatzKind::ExcitationPreservingIswap:
      return rotations + num_rep * pairs;
    case AnsatzKind::ExcitationPreservingFsim:
      return rotations + 2 * num_rep * pairs;
  }
  return 0;
}

}  // namespace qvc::circuit
