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

#include "qvc/sim/gate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qvc/error.hpp"

namespace qvc::sim {

namespace {

constexpr Complex kI{0.0, 1.0};

struct KindInfo {
  GateKind kind;
  std::string_view name;
  int arity;
  bool angle;
  bool diagonal;
  bool controlled;
};

// clang-format off
constexpr std::array<KindInfo, 18> kInfo = {{
    {GateKind::H,      "H",      1, false, false, false},
    {GateKind::P,      "P",      1, true,  true,  false},
    {GateKind::X,      "X",      1, false, false, false},
    {GateKind::Y,      "Y",      1, false, false, false},
    {GateKind::Z,      "Z",      1, false, true,  false},
    {GateKind::RX,     "RX",     1, true,  false, false},
    {GateKind::RY,     "RY",     1, true,  false, false},
    {GateKind::RZ,     "RZ",     1, true,  true,  false},
    {GateKind::CX,     "CX",     2, false, false, true},
    {GateKind::CY,     "CY",     2, false, false, true},
    {GateKind::CZ,     "CZ",     2, false, true,  true},
    {GateKind::CRX,    "CRX",    2, true,  false, true},
    {GateKind::CRY,    "CRY",    2, true,  false, true},
    {GateKind::CRZ,    "CRZ",    2, true,  true,  true},
    {GateKind::RXX,    "RXX",    2, true,  false, false},
    {GateKind::RYY,    "RYY",    2, true,  false, false},
    {GateKind::RZZ,    "RZZ",    2, true,  true,  false},
    {GateKind::CPhase, "CPhase", 2, true,  true,  true},
}};
// clang-format on

const KindInfo& info(GateKind kind) noexcept {
  return kInfo[static_cast<std::size_t>(kind)];
}

}  // namespace

int arity(GateKind kind) noexcept { return info(kind).arity; }
bool takes_angle(GateKind kind) noexcept { return info(kind).angle; }
bool is_diagonal(GateKind kind) noexcept { return info(kind).diagonal; }
bool is_controlled(GateKind kind) noexcept { return info(kind).controlled; }
std::string_view gate_name(GateKind kind) noexcept { return info(kind).name; }

std::optional<GateKind> parse_gate_kind(std::string_view name) noexcept {
  for (const auto& entry : kInfo) {
    if (entry.name == name) return entry.kind;
  }
  return std::nullopt;
}

void GateInstance::validate(int register_size) const {
  if (takes_angle(kind) != angle.has_value()) {
    throw UsageError(std::string(gate_name(kind)) +
                     (angle ? " does not take an angle" : " requires an angle"));
  }
  if (angle && !std::isfinite(*angle)) {
    throw UsageError(std::string(gate_name(kind)) + " angle is not finite");
  }
  const int n = arity(kind);
  for (int i = 0; i < n; ++i) {
    if (qubits[i] < 0 || qubits[i] >= register_size) {
      throw UsageError("qubit index " + std::to_string(qubits[i]) + " out of range for " +
                       std::to_string(register_size) + "-qubit register");
    }
  }
  if (n == 2 && qubits[0] == qubits[1]) {
    throw UsageError(std::string(gate_name(kind)) + " needs two distinct qubits");
  }
}

namespace {

GateInstance make_single(GateKind kind, int qubit, std::optional<double> angle) {
  if (arity(kind) != 1) {
    throw UsageError(std::string(gate_name(kind)) + " is a two-qubit gate");
  }
  GateInstance gate{kind, {qubit, qubit}, angle};
  gate.validate(qubit + 1);
  return gate;
}

GateInstance make_pair(GateKind kind, int first, int second, std::optional<double> angle) {
  if (arity(kind) != 2) {
    throw UsageError(std::string(gate_name(kind)) + " is a single-qubit gate");
  }
  GateInstance gate{kind, {first, second}, angle};
  gate.validate(std::max(first, second) + 1);
  return gate;
}

}  // namespace

GateInstance make_gate(GateKind kind, int qubit) { return make_single(kind, qubit, std::nullopt); }
GateInstance make_gate(GateKind kind, int qubit, double angle) { return make_single(kind, qubit, angle); }
GateInstance make_gate(GateKind kind, int first, int second) {
  return make_pair(kind, first, second, std::nullopt);
}
GateInstance make_gate(GateKind kind, int first, int second, double angle) {
  return make_pair(kind, first, second, angle);
}

Matrix2 target_matrix(GateKind kind, double angle) {
  const double c = std::cos(angle / 2);
  const double s = std::sin(angle / 2);
  switch (kind) {
    case GateKind::H: {
      const double h = std::numbers::sqrt2 / 2;
      return {h, h, h, -h};
    }
    case GateKind::P:
    case GateKind::CPhase:
      return {1.0, 0.0, 0.0, std::polar(1.0, angle)};
    case GateKind::X:
    case GateKind::CX:
      return {0.0, 1.0, 1.0, 0.0};
    case GateKind::Y:
    case GateKind::CY:
      return {0.0, -kI, kI, 0.0};
    case GateKind::Z:
    case GateKind::CZ:
      return {1.0, 0.0, 0.0, -1.0};
    case GateKind::RX:
    case GateKind::CRX:
      return {c, -kI * s, -kI * s, c};
    case GateKind::RY:
    case GateKind::CRY:
      return {c, -s, s, c};
    case GateKind::RZ:
    case GateKind::CRZ:
      return {std::polar(1.0, -angle / 2), 0.0, 0.0, std::polar(1.0, angle / 2)};
    case GateKind::RXX:
    case GateKind::RYY:
    case GateKind::RZZ:
      break;
  }
  throw UsageError(std::string(gate_name(kind)) + " has no single-qubit target matrix");
}

Matrix4 two_qubit_matrix(GateKind kind, double angle) {
  if (arity(kind) != 2) {
    throw UsageError(std::string(gate_name(kind)) + " is a single-qubit gate");
  }
  Matrix4 m{};
  const double c = std::cos(angle / 2);
  const double s = std::sin(angle / 2);
  auto at = [&m](int row, int col) -> Complex& { return m[row * 4 + col]; };
  switch (kind) {
    case GateKind::RXX:
      for (int l = 0; l < 4; ++l) {
        at(l, l) = c;
        at(l, l ^ 3) = -kI * s;
      }
      return m;
    case GateKind::RYY:
      for (int l = 0; l < 4; ++l) at(l, l) = c;
      at(0, 3) = at(3, 0) = kI * s;
      at(1, 2) = at(2, 1) = -kI * s;
      return m;
    case GateKind::RZZ:
      at(0, 0) = at(3, 3) = std::polar(1.0, -angle / 2);
      at(1, 1) = at(2, 2) = std::polar(1.0, angle / 2);
      return m;
    default: {
      // Controlled: qubits[0] (local bit 0) is the control.
      const Matrix2 u = target_matrix(kind, angle);
      at(0, 0) = 1.0;
      at(2, 2) = 1.0;
      at(1, 1) = u[0];
      at(1, 3) = u[1];
      at(3, 1) = u[2];
      at(3, 3) = u[3];
      return m;
    }
  }
}

std::string to_string(const GateInstance& gate) {
  std::ostringstream out;
  out << gate_name(gate.kind);
  if (gate.angle) out << '(' << *gate.angle << ')';
  out << " q" << gate.qubits[0];
  if (gate.num_qubits() == 2) out << ",q" << gate.qubits[1];
  return out.str();
}

}  // namespace qvc::sim
