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
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace qvc::sim {

using Complex = std::complex<double>;

enum class GateKind : std::uint8_t {
  H, P, X, Y, Z,
  RX, RY, RZ,
  CX, CY, CZ,
  CRX, CRY, CRZ,
  RXX, RYY, RZZ,
  CPhase,
};

inline constexpr std::array<GateKind, 18> kAllGateKinds = {
    GateKind::H,   GateKind::P,   GateKind::X,   GateKind::Y,   GateKind::Z,
    GateKind::RX,  GateKind::RY,  GateKind::RZ,  GateKind::CX,  GateKind::CY,
    GateKind::CZ,  GateKind::CRX, GateKind::CRY, GateKind::CRZ, GateKind::RXX,
    GateKind::RYY, GateKind::RZZ, GateKind::CPhase,
};

/// Number of qubits the gate acts on (1 or 2).
int arity(GateKind kind) noexcept;
/// True for gates that carry a rotation/phase angle.
bool takes_angle(GateKind kind) noexcept;
/// True for gates whose unitary is diagonal in the computational basis.
bool is_diagonal(GateKind kind) noexcept;
/// True for the controlled family (CX..CRZ, CPhase); qubits[0] is the control.
bool is_controlled(GateKind kind) noexcept;

std::string_view gate_name(GateKind kind) noexcept;
/// Case-sensitive inverse of gate_name; nullopt for unknown names.
std::optional<GateKind> parse_gate_kind(std::string_view name) noexcept;

/// A concrete gate: kind, one or two qubit indices, and an angle for the
/// parameterized kinds. For two-qubit controlled gates qubits[0] is the
/// control and qubits[1] the target.
struct GateInstance {
  GateKind kind = GateKind::H;
  std::array<int, 2> qubits{0, 0};
  std::optional<double> angle;

  int num_qubits() const noexcept { return arity(kind); }

  /// Checks the angle/arity invariants and that every index is below
  /// `register_size`. Throws UsageError.
  void validate(int register_size) const;

  friend bool operator==(const GateInstance&, const GateInstance&) = default;
};

/// Builds a validated single-qubit gate. Throws UsageError when the angle
/// presence does not match the kind.
GateInstance make_gate(GateKind kind, int qubit);
GateInstance make_gate(GateKind kind, int qubit, double angle);
/// Builds a validated two-qubit gate (first = control for controlled kinds).
GateInstance make_gate(GateKind kind, int first, int second);
GateInstance make_gate(GateKind kind, int first, int second, double angle);

/// Row-major 2x2 unitary.
using Matrix2 = std::array<Complex, 4>;
/// Row-major 4x4 unitary over the local basis index (bit of qubits[0]) + 2*(bit of qubits[1]).
using Matrix4 = std::array<Complex, 16>;

/// Local 2x2 matrix of a single-qubit gate, or of the target action of a
/// controlled gate.
Matrix2 target_matrix(GateKind kind, double angle);
/// Full 4x4 matrix of any two-qubit gate in the local basis above.
Matrix4 two_qubit_matrix(GateKind kind, double angle);

std::string to_string(const GateInstance& gate);

}  // namespace qvc::sim
