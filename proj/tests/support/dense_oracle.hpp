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

// Test-only reference: full 2^n x 2^n unitaries built by Kronecker
// embedding and matrix exponentials of Pauli generators. Shares no code
// with the production gate kernels.

#include <Eigen/Dense>
#include <random>
#include <span>
#include <vector>

#include "qvc/sim/gate.hpp"

namespace qvc::testing {

inline constexpr int kOracleMaxQubits = 6;

/// Unitary of a single gate on an n-qubit register (qubit 0 = LSB).
Eigen::MatrixXcd gate_unitary(const sim::GateInstance& gate, int num_qubits);

/// Product of the gate unitaries, first gate applied first. Throws
/// std::invalid_argument for num_qubits > kOracleMaxQubits.
Eigen::MatrixXcd dense_unitary_oracle(std::span<const sim::GateInstance> gates, int num_qubits);

/// Uniformly random gate (kind, qubits, angle in [-2pi, 2pi]) valid on n qubits.
sim::GateInstance random_gate(std::mt19937_64& rng, int num_qubits);
std::vector<sim::GateInstance> random_circuit(std::mt19937_64& rng, int num_qubits, int length);

}  // namespace qvc::testing
