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

// AVX2/FMA kernels. This translation unit is compiled with -mavx2 -mfma and
// must only be entered after a runtime CPU check (see kernels_dispatch.cpp).
// A 256-bit register holds two interleaved complex amplitudes:
// [re0, im0, re1, im1].

#include <cstdint>

#include "qvc/sim/kernels.hpp"

#if defined(QVC_HAVE_AVX2)

#include <immintrin.h>

namespace qvc::sim::kernels {

namespace {

using u64 = std::uint64_t;

/// Per-lane complex multiplier, split into real and imaginary broadcasts.
struct CVec {
  __m256d re;
  __m256d im;
};

inline CVec broadcast(Complex c) { return {_mm256_set1_pd(c.real()), _mm256_set1_pd(c.imag())}; }

// Lane 0 gets `lo`, lane 1 gets `hi`.
inline CVec lanes(Complex lo, Complex hi) {
  return {_mm256_set_pd(hi.real(), hi.real(), lo.real(), lo.real()),
          _mm256_set_pd(hi.imag(), hi.imag(), lo.imag(), lo.imag())};
}

inline __m256d cmul(__m256d a, const CVec& m) {
  const __m256d a_swap = _mm256_permute_pd(a, 0b0101);
  return _mm256_fmaddsub_pd(a, m.re, _mm256_mul_pd(a_swap, m.im));
}

inline __m256d swap_lanes(__m256d v) { return _mm256_permute2f128_pd(v, v, 1); }

inline __m256d load(const Complex* p) { return _mm256_loadu_pd(reinterpret_cast<const double*>(p)); }
inline void store(Complex* p, __m256d v) { _mm256_storeu_pd(reinterpret_cast<double*>(p), v); }

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

// Pair update where both partners of a pair sit in one register (target 0).
struct InRegisterPair {
  CVec diag;
  CVec off;
  explicit InRegisterPair(const Matrix2& m) : diag(lanes(m[0], m[3])), off(lanes(m[1], m[2])) {}
  __m256d operator()(__m256d v) const {
    return _mm256_add_pd(cmul(v, diag), cmul(swap_lanes(v), off));
  }
};

struct SplitPair {
  CVec m00, m01, m10, m11;
  explicit SplitPair(const Matrix2& m)
      : m00(broadcast(m[0])), m01(broadcast(m[1])), m10(broadcast(m[2])), m11(broadcast(m[3])) {}
  void operator()(Complex* p0, Complex* p1) const {
    const __m256d a0 = load(p0);
    const __m256d a1 = load(p1);
    store(p0, _mm256_add_pd(cmul(a0, m00), cmul(a1, m01)));
    store(p1, _mm256_add_pd(cmul(a0, m10), cmul(a1, m11)));
  }
};

void avx2_apply_1q(Amps amps, int target, const Matrix2& m) {
  Complex* data = amps.data();
  const u64 n = amps.size();
  if (target == 0) {
    const InRegisterPair op(m);
    for (u64 i = 0; i < n; i += 2) store(data + i, op(load(data + i)));
    return;
  }
  const SplitPair op(m);
  const u64 stride = u64{1} << target;
  for (u64 k = 0; k < n / 2; k += 2) {
    const u64 i0 = insert_zero_bit(k, target);
    op(data + i0, data + i0 + stride);
  }
}

void avx2_apply_controlled_1q(Amps amps, int control, int target, const Matrix2& m) {
  Complex* data = amps.data();
  const u64 quarter = amps.size() / 4;
  const u64 cbit = u64{1} << control;
  const u64 tbit = u64{1} << target;
  if (target == 0) {
    const InRegisterPair op(m);
    for (u64 k = 0; k < quarter; ++k) {
      const u64 i0 = insert_zero_bits(k, control, target) | cbit;
      store(data + i0, op(load(data + i0)));
    }
    return;
  }
  const SplitPair op(m);
  if (control != 0) {
    for (u64 k = 0; k < quarter; k += 2) {
      const u64 i0 = insert_zero_bits(k, control, target) | cbit;
      op(data + i0, data + i0 + tbit);
    }
    return;
  }
  // Control is qubit 0: each register holds one uncontrolled lane (even
  // index) and one controlled lane (odd index). Update both, keep lane 0.
  for (u64 k = 0; k < quarter; ++k) {
    Complex* p0 = data + insert_zero_bits(k, 0, target);
    Complex* p1 = p0 + tbit;
    const __m256d a0 = load(p0);
    const __m256d a1 = load(p1);
    const __m256d n0 = _mm256_add_pd(cmul(a0, op.m00), cmul(a1, op.m01));
    const __m256d n1 = _mm256_add_pd(cmul(a0, op.m10), cmul(a1, op.m11));
    store(p0, _mm256_blend_pd(a0, n0, 0b1100));
    store(p1, _mm256_blend_pd(a1, n1, 0b1100));
  }
}

void avx2_apply_diag_1q(Amps amps, int target, const std::array<Complex, 2>& diag) {
  Complex* data = amps.data();
  const u64 n = amps.size();
  if (target == 0) {
    const CVec d = lanes(diag[0], diag[1]);
    for (u64 i = 0; i < n; i += 2) store(data + i, cmul(load(data + i), d));
    return;
  }
  const CVec d0 = broadcast(diag[0]);
  const CVec d1 = broadcast(diag[1]);
  const u64 stride = u64{1} << target;
  for (u64 k = 0; k < n / 2; k += 2) {
    const u64 i0 = insert_zero_bit(k, target);
    store(data + i0, cmul(load(data + i0), d0));
    store(data + i0 + stride, cmul(load(data + i0 + stride), d1));
  }
}

void avx2_apply_diag_2q(Amps amps, int qa, int qb, const std::array<Complex, 4>& diag) {
  Complex* data = amps.data();
  const u64 n = amps.size();
  auto local = [qa, qb](u64 b) { return ((b >> qa) & 1) | (((b >> qb) & 1) << 1); };
  if (qa != 0 && qb != 0) {
    // Both lanes of a register share the same local index.
    for (u64 i = 0; i < n; i += 2) store(data + i, cmul(load(data + i), broadcast(diag[local(i)])));
    return;
  }
  for (u64 i = 0; i < n; i += 2) {
    store(data + i, cmul(load(data + i), lanes(diag[local(i)], diag[local(i + 1)])));
  }
}

void avx2_apply_2q(Amps amps, int qa, int qb, const Matrix4& m) {
  Complex* data = amps.data();
  const u64 quarter = amps.size() / 4;
  const u64 abit = u64{1} << qa;
  const u64 bbit = u64{1} << qb;
  if (qa != 0 && qb != 0) {
    CVec c[16];
    for (int i = 0; i < 16; ++i) c[i] = broadcast(m[i]);
    for (u64 k = 0; k < quarter; k += 2) {
      const u64 base = insert_zero_bits(k, qa, qb);
      Complex* p[4] = {data + base, data + (base | abit), data + (base | bbit),
                       data + (base | abit | bbit)};
      const __m256d in[4] = {load(p[0]), load(p[1]), load(p[2]), load(p[3])};
      for (int r = 0; r < 4; ++r) {
        __m256d acc = cmul(in[0], c[r * 4]);
        for (int l = 1; l < 4; ++l) acc = _mm256_add_pd(acc, cmul(in[l], c[r * 4 + l]));
        store(p[r], acc);
      }
    }
    return;
  }
  // One of the qubits is 0. Register y holds the two amplitudes with the
  // other qubit's bit equal to y; lane j has qubit-0 bit j.
  const int other = qa == 0 ? qb : qa;
  const u64 obit = u64{1} << other;
  auto local_index = [qa](int reg, int lane) {
    const int bit0 = lane;
    const int bit_other = reg;
    return qa == 0 ? bit0 + 2 * bit_other : bit_other + 2 * bit0;
  };
  auto coeff = [&m](int row, int col) { return m[row * 4 + col]; };
  CVec direct[2][2];
  CVec swapped[2][2];
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      direct[x][y] = lanes(coeff(local_index(x, 0), local_index(y, 0)),
                           coeff(local_index(x, 1), local_index(y, 1)));
      swapped[x][y] = lanes(coeff(local_index(x, 0), local_index(y, 1)),
                            coeff(local_index(x, 1), local_index(y, 0)));
    }
  }
  for (u64 k = 0; k < quarter; ++k) {
    Complex* p0 = data + insert_zero_bits(k, 0, other);
    Complex* p1 = p0 + obit;
    const __m256d r[2] = {load(p0), load(p1)};
    const __m256d s[2] = {swap_lanes(r[0]), swap_lanes(r[1])};
    __m256d out[2];
    for (int x = 0; x < 2; ++x) {
      out[x] = _mm256_add_pd(_mm256_add_pd(cmul(r[0], direct[x][0]), cmul(s[0], swapped[x][0])),
                             _mm256_add_pd(cmul(r[1], direct[x][1]), cmul(s[1], swapped[x][1])));
    }
    store(p0, out[0]);
    store(p1, out[1]);
  }
}

double avx2_expectation_z(ConstAmps amps, int target) {
  const Complex* data = amps.data();
  const u64 n = amps.size();
  if (target == 0) {
    __m256d acc = _mm256_setzero_pd();
    for (u64 i = 0; i < n; i += 2) {
      const __m256d v = load(data + i);
      acc = _mm256_fmadd_pd(v, v, acc);
    }
    alignas(32) double parts[4];
    _mm256_store_pd(parts, acc);
    return (parts[0] + parts[1]) - (parts[2] + parts[3]);
  }
  __m256d plus = _mm256_setzero_pd();
  __m256d minus = _mm256_setzero_pd();
  const u64 stride = u64{1} << target;
  for (u64 k = 0; k < n / 2; k += 2) {
    const u64 i0 = insert_zero_bit(k, target);
    const __m256d a = load(data + i0);
    const __m256d b = load(data + i0 + stride);
    plus = _mm256_fmadd_pd(a, a, plus);
    minus = _mm256_fmadd_pd(b, b, minus);
  }
  return hsum(plus) - hsum(minus);
}

double avx2_norm_squared(ConstAmps amps) {
  const Complex* data = amps.data();
  __m256d acc = _mm256_setzero_pd();
  for (u64 i = 0; i < amps.size(); i += 2) {
    const __m256d v = load(data + i);
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  return hsum(acc);
}

}  // namespace

const KernelSet& avx2_kernel_table() noexcept {
  static const KernelSet kSet{
      "avx2",
      &avx2_apply_1q,
      &avx2_apply_controlled_1q,
      &avx2_apply_diag_1q,
      &avx2_apply_diag_2q,
      &avx2_apply_2q,
      &avx2_expectation_z,
      &avx2_norm_squared,
  };
  return kSet;
}

}  // namespace qvc::sim::kernels

#endif  // QVC_HAVE_AVX2
