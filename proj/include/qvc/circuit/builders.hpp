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
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "qvc/circuit/entanglement.hpp"
#include "qvc/circuit/template.hpp"

namespace qvc::circuit {

enum class AnsatzKind {
  RealAmplitudes,             // ra
  PauliTwoDesign,             // ptd
  EfficientSU2,               // es
  ExcitationPreservingIswap,  // ep_is
  ExcitationPreservingFsim,   // ep_fs
};

inline constexpr std::array<AnsatzKind, 5> kAllAnsatze = {
    AnsatzKind::RealAmplitudes,           AnsatzKind::EfficientSU2,
    AnsatzKind::ExcitationPreservingFsim, AnsatzKind::ExcitationPreservingIswap,
    AnsatzKind::PauliTwoDesign,
};

std::string_view code(AnsatzKind kind) noexcept;
std::optional<AnsatzKind> parse_ansatz(std::string_view code) noexcept;

/// ZZ feature map with one repetition: H on every qubit, P(2 v_i) on qubit
/// i, then for each linear pair (i, j): CX(i, j), P(2 phi(v_i, v_j)) on j,
/// CX(i, j). Throws ConfigError unless 2 <= num_features <= 24.
CircuitTemplate build_zz_feature_map(int num_features);

struct AnsatzOptions {
  /// Per-qubit rotation block of the es family. Parameterized kinds get a
  /// trainable slot; fixed Pauli kinds carry none.
  std::vector<sim::GateKind> es_rotation_block{sim::GateKind::RY, sim::GateKind::Z};
};

/// Two-local ansatz: `num_rep` blocks of (rotation layer, entanglement
/// layer) followed by a final rotation layer. Trainable slots are numbered
/// in gate order. `rng_seed` only affects ptd, whose rotation gates are
/// drawn uniformly from {RX, RY, RZ}.
///
/// Throws ConfigError for num_qubits < 2, num_rep < 1, or ptd with an
/// entanglement other than pw.
CircuitTemplate build_ansatz(AnsatzKind kind, int num_qubits, int num_rep, EntanglementKind entangle,
                             std::uint64_t rng_seed, const AnsatzOptions& options = {});

/// Closed-form trainable-parameter count for the default options.
int expected_trainable_count(AnsatzKind kind, int num_qubits, int num_rep, EntanglementKind entangle);

}  // namespace qvc::circuit
