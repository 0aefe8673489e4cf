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

// Scalar reference kernels. These define the expected results for every
// vectorized variant.

#include <cstdint>

#include "qvc/sim/kernels.hpp"

namespace qvc::sim::kernels {

namespace {

using u64 = std::uint64_t;

void scalar_apply_1q(Amps amps, int target, const Matrix2& m) {
  const u64 half = amps.size() / 2;
  const u64 stride = u64{1} << target;
  for (u64 k = 0; k < half; ++k) {
    const u64 i0 = insert_zero_bit(k, target);
    const u64 i1 = i0 | stride;
    const Complex a0 = amps[i0];
    const Complex a1 = amps[i1];
    amps[i0] = m[0] * a0 + m[1] * a1;
    amps[i1] = m[2] * a0 + m[3] * a1;
  }
}

void scalar_apply_controlled_1q(Amps amps, int control, int target, const Matrix2& m) {
  const u64 quarter = amps.size() / 4;
  const u64 cbit = u64{1} << control;
  const u64 tbit = u64{1} << target;
  for (u64 k = 0; k < quarter; ++k) {
    const u64 i0 = insert_zero_bits(k, control, target) | cbit;
    const u64 i1 = i0 | tbit;
    const Complex a0 = amps[i0];
    const Complex a1 = amps[i1];
    amps[i0] = m[0] * a0 + m[1] * a1;
    amps[i1] = m[2] * a0 + m[3] * a1;
  }
}

void scalar_apply_diag_1q(Amps amps, int target, const std::array<Complex, 2>& diag) {
  for (u64 b = 0; b < amps.size(); ++b) {
    amps[b] *= diag[(b >> target) & 1];
  }
}

void scalar_apply_diag_2q(Amps amps, int qa, int qb, const std::array<Complex, 4>& diag) {
  for (u64 b = 0; b < amps.size(); ++b) {
    amps[b] *= diag[((b >> qa) & 1) | (((b >> qb) & 1) << 1)];
  }
}

void scalar_apply_2q(Amps amps, int qa, int qb, const Matrix4& m) {
  const u64 quarter = amps.size() / 4;
  const u64 abit = u64{1} << qa;
  const u64 bbit = u64{1} << qb;
  for (u64 k = 0; k < quarter; ++k) {
    const u64 base = insert_zero_bits(k, qa, qb);
    const u64 idx[4] = {base, base | abit, base | bbit, base | abit | bbit};
    Complex in[4];
    for (int l = 0; l < 4; ++l) in[l] = amps[idx[l]];
    for (int r = 0; r < 4; ++r) {
      Complex acc = 0.0;
      for (int l = 0; l < 4; ++l) acc += m[r * 4 + l] * in[l];
      amps[idx[r]] = acc;
    }
  }
}

double scalar_expectation_z(ConstAmps amps, int target) {
  double plus = 0.0;
  double minus = 0.0;
  for (u64 b = 0; b < amps.size(); ++b) {
    const double p = std::norm(amps[b]);
    if ((b >> target) & 1) {
      minus += p;
    } else {
      plus += p;
    }
  }
  return plus - minus;
}

double scalar_norm_squared(ConstAmps amps) {
  double total = 0.0;
  for (const Complex& a : amps) total += std::norm(a);
  return total;
}

}  // namespace

const KernelSet& scalar_kernels() noexcept {
  static const KernelSet kSet{
      "scalar",
      &scalar_apply_1q,
      &scalar_apply_controlled_1q,
      &scalar_apply_diag_1q,
      &scalar_apply_diag_2q,
      &scalar_apply_2q,
      &scalar_expectation_z,
      &scalar_norm_squared,
  };
  return kSet;
}

}  // namespace qvc::sim::kernels
