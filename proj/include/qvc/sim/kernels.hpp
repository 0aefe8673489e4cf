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

// Amplitude-update kernels behind QuantumState. Every kernel has a scalar
// reference implementation; vectorized variants are selected at runtime
// and must agree with the reference to rounding.
//
// Layout: amplitudes are interleaved std::complex<double>, qubit 0 is the
// least-significant bit of the basis index.

#include <array>
#include <cstdint>
#include <span>
#include <string_view>

#include "qvc/sim/gate.hpp"

namespace qvc::sim::kernels {

using Amps = std::span<Complex>;
using ConstAmps = std::span<const Complex>;

struct KernelSet {
  std::string_view name;

  /// amps[i0], amps[i1] <- m * (amps[i0], amps[i1]) for every pair differing
  /// in bit `target`.
  void (*apply_1q)(Amps amps, int target, const Matrix2& m);

  /// As apply_1q, restricted to basis states whose `control` bit is set.
  void (*apply_controlled_1q)(Amps amps, int control, int target, const Matrix2& m);

  /// amps[b] *= diag[bit(b, target)].
  void (*apply_diag_1q)(Amps amps, int target, const std::array<Complex, 2>& diag);

  /// amps[b] *= diag[bit(b, qa) + 2 * bit(b, qb)].
  void (*apply_diag_2q)(Amps amps, int qa, int qb, const std::array<Complex, 4>& diag);

  /// General 4x4 update over the local index bit(b, qa) + 2 * bit(b, qb).
  void (*apply_2q)(Amps amps, int qa, int qb, const Matrix4& m);

  /// Sum over b of |amps[b]|^2 * (bit(b, target) ? -1 : +1).
  double (*expectation_z)(ConstAmps amps, int target);

  double (*norm_squared)(ConstAmps amps);
};

enum class Backend { Scalar, Avx2 };

const KernelSet& scalar_kernels() noexcept;

/// Vectorized kernels if compiled in and supported by the running CPU,
/// otherwise nullptr.
const KernelSet* avx2_kernels() noexcept;

/// Kernel set used by QuantumState. Resolved once: the best supported
/// backend, unless the environment variable QVC_SIMD=scalar forces the
/// reference path.
const KernelSet& active_kernels() noexcept;

/// Overrides the active backend (tests and benchmarks). Returns false and
/// leaves the selection unchanged when the backend is unavailable.
bool select_backend(Backend backend) noexcept;

/// Inserts a zero bit at position `bit` into `value`.
constexpr std::uint64_t insert_zero_bit(std::uint64_t value, int bit) noexcept {
  const std::uint64_t low = value & ((std::uint64_t{1} << bit) - 1);
  return ((value >> bit) << (bit + 1)) | low;
}

/// Inserts zero bits at two distinct positions.
constexpr std::uint64_t insert_zero_bits(std::uint64_t value, int a, int b) noexcept {
  const int lo = a < b ? a : b;
  const int hi = a < b ? b : a;
  return insert_zero_bit(insert_zero_bit(value, lo), hi);
}

}  // namespace qvc::sim::kernels
