// Copyright 2026 The truncg Authors
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

// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.

#include <immintrin.h>

#include "truncg/kernels.hpp"

namespace truncg::kernels::avx2 {

namespace {

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

// (lane1 + lane3) - (lane0 + lane2)
inline double odd_minus_even(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_sub_sd(_mm_unpackhi_pd(s, s), s));
}

// [w0 w0 w1 w1]
inline __m256d load_weights(const double *w) {
  const __m256d v = _mm256_castpd128_pd256(_mm_loadu_pd(w));
  return _mm256_permute4x64_pd(v, 0b01010000);
}

}  // namespace

// Two complex numbers per register: [re0 im0 re1 im1]. Real part accumulates
// a*b lanewise; imaginary part accumulates a*swap(b) and is folded as
// sum(ai*br) - sum(ar*bi).
cplx cdotc(const cplx *a, const cplx *b, std::size_t n) {
  const double *pa = reinterpret_cast<const double *>(a);
  const double *pb = reinterpret_cast<const double *>(b);
  __m256d re0 = _mm256_setzero_pd(), re1 = _mm256_setzero_pd();
  __m256d im0 = _mm256_setzero_pd(), im1 = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d va0 = _mm256_loadu_pd(pa + 2 * k);
    const __m256d vb0 = _mm256_loadu_pd(pb + 2 * k);
    const __m256d va1 = _mm256_loadu_pd(pa + 2 * k + 4);
    const __m256d vb1 = _mm256_loadu_pd(pb + 2 * k + 4);
    re0 = _mm256_fmadd_pd(va0, vb0, re0);
    re1 = _mm256_fmadd_pd(va1, vb1, re1);
    im0 = _mm256_fmadd_pd(va0, _mm256_permute_pd(vb0, 0b0101), im0);
    im1 = _mm256_fmadd_pd(va1, _mm256_permute_pd(vb1, 0b0101), im1);
  }
  if (k + 2 <= n) {
    const __m256d va = _mm256_loadu_pd(pa + 2 * k);
    const __m256d vb = _mm256_loadu_pd(pb + 2 * k);
    re0 = _mm256_fmadd_pd(va, vb, re0);
    im0 = _mm256_fmadd_pd(va, _mm256_permute_pd(vb, 0b0101), im0);
    k += 2;
  }
  double re = hsum(_mm256_add_pd(re0, re1));
  double im = odd_minus_even(_mm256_add_pd(im0, im1));
  for (; k < n; ++k) {
    re += a[k].real() * b[k].real() + a[k].imag() * b[k].imag();
    im += a[k].imag() * b[k].real() - a[k].real() * b[k].imag();
  }
  return {re, im};
}

cplx wcdotc(const cplx *a, const cplx *b, const double *w, std::size_t n) {
  const double *pa = reinterpret_cast<const double *>(a);
  const double *pb = reinterpret_cast<const double *>(b);
  __m256d re0 = _mm256_setzero_pd(), re1 = _mm256_setzero_pd();
  __m256d im0 = _mm256_setzero_pd(), im1 = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d va0 = _mm256_mul_pd(_mm256_loadu_pd(pa + 2 * k), load_weights(w + k));
    const __m256d va1 = _mm256_mul_pd(_mm256_loadu_pd(pa + 2 * k + 4), load_weights(w + k + 2));
    const __m256d vb0 = _mm256_loadu_pd(pb + 2 * k);
    const __m256d vb1 = _mm256_loadu_pd(pb + 2 * k + 4);
    re0 = _mm256_fmadd_pd(va0, vb0, re0);
    re1 = _mm256_fmadd_pd(va1, vb1, re1);
    im0 = _mm256_fmadd_pd(va0, _mm256_permute_pd(vb0, 0b0101), im0);
    im1 = _mm256_fmadd_pd(va1, _mm256_permute_pd(vb1, 0b0101), im1);
  }
  if (k + 2 <= n) {
    const __m256d va = _mm256_mul_pd(_mm256_loadu_pd(pa + 2 * k), load_weights(w + k));
    const __m256d vb = _mm256_loadu_pd(pb + 2 * k);
    re0 = _mm256_fmadd_pd(va, vb, re0);
    im0 = _mm256_fmadd_pd(va, _mm256_permute_pd(vb, 0b0101), im0);
    k += 2;
  }
  double re = hsum(_mm256_add_pd(re0, re1));
  double im = odd_minus_even(_mm256_add_pd(im0, im1));
  for (; k < n; ++k) {
    const double ar = w[k] * a[k].real();
    const double ai = w[k] * a[k].imag();
    re += ar * b[k].real() + ai * b[k].imag();
    im += ai * b[k].real() - ar * b[k].imag();
  }
  return {re, im};
}

double abs2_sum(const cplx *a, std::size_t n) {
  const double *pa = reinterpret_cast<const double *>(a);
  __m256d s0 = _mm256_setzero_pd(), s1 = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d v0 = _mm256_loadu_pd(pa + 2 * k);
    const __m256d v1 = _mm256_loadu_pd(pa + 2 * k + 4);
    s0 = _mm256_fmadd_pd(v0, v0, s0);
    s1 = _mm256_fmadd_pd(v1, v1, s1);
  }
  if (k + 2 <= n) {
    const __m256d v = _mm256_loadu_pd(pa + 2 * k);
    s0 = _mm256_fmadd_pd(v, v, s0);
    k += 2;
  }
  double s = hsum(_mm256_add_pd(s0, s1));
  for (; k < n; ++k) s += a[k].real() * a[k].real() + a[k].imag() * a[k].imag();
  return s;
}

}  // namespace truncg::kernels::avx2
