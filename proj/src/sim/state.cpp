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

#include "qvc/sim/state.hpp"

#include <bit>
#include <string>

#include "qvc/error.hpp"
#include "qvc/sim/kernels.hpp"

namespace qvc::sim {

QuantumState::QuantumState(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxQubits) {
    throw ConfigError("num_qubits must be in [1, " + std::to_string(kMaxQubits) + "], got " +
                      std::to_string(num_qubits));
  }
  amplitudes_.assign(std::size_t{1} << num_qubits, Complex{0.0, 0.0});
  amplitudes_[0] = 1.0;
}

QuantumState QuantumState::from_amplitudes(std::vector<Complex> amplitudes) {
  const std::size_t size = amplitudes.size();
  if (size < 2 || !std::has_single_bit(size) || size > (std::size_t{1} << kMaxQubits)) {
    throw UsageError("amplitude vector length must be a power of two >= 2, got " +
                     std::to_string(size));
  }
  QuantumState state;
  state.num_qubits_ = std::countr_zero(size);
  state.amplitudes_ = std::move(amplitudes);
  return state;
}

void QuantumState::apply(const GateInstance& gate) {
  gate.validate(num_qubits_);
  const auto& k = kernels::active_kernels();
  const double angle = gate.angle.value_or(0.0);
  const int q0 = gate.qubits[0];
  const int q1 = gate.qubits[1];
  switch (gate.kind) {
    case GateKind::P:
    case GateKind::Z:
    case GateKind::RZ: {
      const Matrix2 m = target_matrix(gate.kind, angle);
      k.apply_diag_1q(amplitudes_, q0, {m[0], m[3]});
      return;
    }
    case GateKind::H:
    case GateKind::X:
    case GateKind::Y:
    case GateKind::RX:
    case GateKind::RY:
      k.apply_1q(amplitudes_, q0, target_matrix(gate.kind, angle));
      return;
    case GateKind::CX:
    case GateKind::CY:
    case GateKind::CRX:
    case GateKind::CRY:
      k.apply_controlled_1q(amplitudes_, q0, q1, target_matrix(gate.kind, angle));
      return;
    case GateKind::CZ:
    case GateKind::CRZ:
    case GateKind::RZZ:
    case GateKind::CPhase: {
      const Matrix4 m = two_qubit_matrix(gate.kind, angle);
      k.apply_diag_2q(amplitudes_, q0, q1, {m[0], m[5], m[10], m[15]});
      return;
    }
    case GateKind::RXX:
    case GateKind::RYY:
      k.apply_2q(amplitudes_, q0, q1, two_qubit_matrix(gate.kind, angle));
      return;
  }
}

void QuantumState::apply(std::span<const GateInstance> gates) {
  for (const GateInstance& gate : gates) apply(gate);
}

double QuantumState::expectation_z(int qubit) const {
  if (qubit < 0 || qubit >= num_qubits_) {
    throw UsageError("qubit index " + std::to_string(qubit) + " out of range for " +
                     std::to_string(num_qubits_) + "-qubit state");
  }
  return kernels::active_kernels().expectation_z(amplitudes_, qubit);
}

double QuantumState::norm_squared() const noexcept {
  return kernels::active_kernels().norm_squared(amplitudes_);
}

QuantumState zero_state(int num_qubits) { return QuantumState(num_qubits); }

QuantumState apply_gate(QuantumState state, const GateInstance& gate) {
  state.apply(gate);
  return state;
}

double expectation_z(const QuantumState& state, int qubit) { return state.expectation_z(qubit); }

}  // namespace qvc::sim
