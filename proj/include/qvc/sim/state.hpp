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
#include <span>
#include <vector>

#include "qvc/sim/gate.hpp"

namespace qvc::sim {

inline constexpr int kMaxQubits = 24;

/// Dense statevector over 2^n basis states. Qubit 0 is the least-significant
/// bit of the basis index. A value type: copy to branch a simulation.
class QuantumState {
 public:
  /// |0...0> on `num_qubits` qubits. Throws ConfigError outside [1, kMaxQubits].
  explicit QuantumState(int num_qubits);

  /// Adopts an explicit amplitude vector (length must be a power of two
  /// >= 2). The vector is not renormalized.
  static QuantumState from_amplitudes(std::vector<Complex> amplitudes);

  int num_qubits() const noexcept { return num_qubits_; }
  std::size_t dimension() const noexcept { return amplitudes_.size(); }

  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  std::span<Complex> amplitudes() noexcept { return amplitudes_; }
  const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }

  /// Applies `gate` in place. Throws UsageError on invalid indices.
  void apply(const GateInstance& gate);
  void apply(std::span<const GateInstance> gates);

  /// <Z> on `qubit`, in [-1, 1] for a normalized state.
  double expectation_z(int qubit) const;
  double norm_squared() const noexcept;

 private:
  QuantumState() = default;

  int num_qubits_ = 0;
  std::vector<Complex> amplitudes_;
};

QuantumState zero_state(int num_qubits);

/// Value-semantics wrapper around QuantumState::apply.
QuantumState apply_gate(QuantumState state, const GateInstance& gate);

double expectation_z(const QuantumState& state, int qubit);

}  // namespace qvc::sim
