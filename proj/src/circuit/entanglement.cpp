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

#include "qvc/circuit/entanglement.hpp"

#include <algorithm>
#include <string>

#include "qvc/error.hpp"

namespace qvc::circuit {

namespace {

constexpr std::array<std::pair<EntanglementKind, std::string_view>, 6> kCodes = {{
    {EntanglementKind::Linear, "ln"},
    {EntanglementKind::Full, "fl"},
    {EntanglementKind::Pairwise, "pw"},
    {EntanglementKind::ReverseLinear, "rl"},
    {EntanglementKind::Circular, "cl"},
    {EntanglementKind::ShiftedCircularAlternating, "sca"},
}};

std::vector<QubitPair> linear(int n) {
  std::vector<QubitPair> pairs;
  for (int i = 0; i + 1 < n; ++i) pairs.push_back({i, i + 1});
  return pairs;
}

std::vector<QubitPair> circular(int n) {
  if (n == 2) return linear(n);
  std::vector<QubitPair> pairs{{n - 1, 0}};
  for (const QubitPair& p : linear(n)) pairs.push_back(p);
  return pairs;
}

}  // namespace

std::string_view code(EntanglementKind kind) noexcept {
  for (const auto& [k, c] : kCodes) {
    if (k == kind) return c;
  }
  return "?";
}

std::optional<EntanglementKind> parse_entanglement(std::string_view text) noexcept {
  for (const auto& [k, c] : kCodes) {
    if (c == text) return k;
  }
  return std::nullopt;
}

std::vector<QubitPair> entanglement_pairs(EntanglementKind kind, int num_qubits, int repetition) {
  if (num_qubits < 2) {
    throw ConfigError("entanglement needs at least 2 qubits, got " + std::to_string(num_qubits));
  }
  if (repetition < 0) {
    throw ConfigError("repetition index must be non-negative");
  }
  const int n = num_qubits;
  switch (kind) {
    case EntanglementKind::Linear:
      return linear(n);
    case EntanglementKind::ReverseLinear: {
      auto pairs = linear(n);
      std::reverse(pairs.begin(), pairs.end());
      return pairs;
    }
    case EntanglementKind::Full: {
      std::vector<QubitPair> pairs;
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
      }
      return pairs;
    }
    case EntanglementKind::Pairwise: {
      std::vector<QubitPair> pairs;
      for (int i = 0; i + 1 < n; i += 2) pairs.push_back({i, i + 1});
      for (int i = 1; i + 1 < n; i += 2) pairs.push_back({i, i + 1});
      return pairs;
    }
    case EntanglementKind::Circular:
      return circular(n);
    case EntanglementKind::ShiftedCircularAlternating: {
      auto pairs = circular(n);
      const auto shift = static_cast<std::ptrdiff_t>(repetition % static_cast<int>(pairs.size()));
      std::rotate(pairs.begin(), pairs.end() - shift, pairs.end());
      if (repetition % 2 == 1) {
        for (QubitPair& p : pairs) std::swap(p.control, p.target);
      }
      return pairs;
    }
  }
  return {};
}

}  // namespace qvc::circuit
