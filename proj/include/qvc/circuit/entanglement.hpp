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
#include <optional>
#include <string_view>
#include <vector>

namespace qvc::circuit {

/// Pair schedules for entanglement layers. The short codes (ln, fl, ...)
/// are the names used in files and on the command line.
enum class EntanglementKind {
  Linear,                      // ln
  Full,                        // fl
  Pairwise,                    // pw
  ReverseLinear,               // rl
  Circular,                    // cl
  ShiftedCircularAlternating,  // sca
};

inline constexpr std::array<EntanglementKind, 6> kAllEntanglements = {
    EntanglementKind::Full,     EntanglementKind::Linear,   EntanglementKind::ReverseLinear,
    EntanglementKind::Pairwise, EntanglementKind::Circular, EntanglementKind::ShiftedCircularAlternating,
};

std::string_view code(EntanglementKind kind) noexcept;
std::optional<EntanglementKind> parse_entanglement(std::string_view code) noexcept;

struct QubitPair {
  int control = 0;
  int target = 0;
  friend bool operator==(const QubitPair&, const QubitPair&) = default;
};

/// Ordered (control, target) pairs of one entanglement layer.
///
///   ln   (0,1), (1,2), ..., (n-2,n-1)
///   rl   ln reversed
///   fl   every (i,j) with i<j, lexicographic
///   pw   pairs starting on even qubits, then pairs starting on odd qubits
///   cl   (n-1,0) followed by ln
///   sca  cl rotated right by `repetition` positions, with control and
///        target swapped on odd repetitions
///
/// With two qubits cl and sca reduce to the single ln pair. Only sca
/// depends on `repetition`. Throws ConfigError for num_qubits < 2.
std::vector<QubitPair> entanglement_pairs(EntanglementKind kind, int num_qubits, int repetition = 0);

}  // namespace qvc::circuit
