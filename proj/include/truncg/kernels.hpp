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

#pragma once

// Dense complex reductions used by the hot loops (spectral composition,
// Gram products, purity, overlap). Each kernel has a portable scalar
// reference and, on x86-64, an AVX2+FMA variant picked at runtime.

#include <complex>
#include <cstddef>
#include <span>

namespace truncg::kernels {

using cplx = std::complex<double>;

enum class Isa { Scalar, Avx2 };

const char *to_string(Isa isa);

struct KernelTable {
  /// sum_k a[k] * conj(b[k])
  cplx (*cdotc)(const cplx *a, const cplx *b, std::size_t n);
  /// sum_k w[k] * a[k] * conj(b[k])
  cplx (*wcdotc)(const cplx *a, const cplx *b, const double *w, std::size_t n);
  /// sum_k |a[k]|^2
  double (*abs2_sum)(const cplx *a, std::size_t n);
};

bool isa_available(Isa isa);

/// Table for a specific instruction set. Throws if the ISA is not available
/// on this CPU or was not compiled in.
const KernelTable &table(Isa isa);

/// Best available ISA, unless overridden by set_active_isa() or the
/// TRUNCG_SIMD environment variable ("scalar" or "avx2").
Isa active_isa();
void set_active_isa(Isa isa);

const KernelTable &active();

inline cplx cdotc(std::span<const cplx> a, std::span<const cplx> b) {
  return active().cdotc(a.data(), b.data(), a.size());
}

inline cplx wcdotc(std::span<const cplx> a, std::span<const cplx> b, std::span<const double> w) {
  return active().wcdotc(a.data(), b.data(), w.data(), a.size());
}

inline double abs2_sum(std::span<const cplx> a) { return active().abs2_sum(a.data(), a.size()); }

namespace scalar {
cplx cdotc(const cplx *a, const cplx *b, std::size_t n);
cplx wcdotc(const cplx *a, const cplx *b, const double *w, std::size_t n);
double abs2_sum(const cplx *a, std::size_t n);
}  // namespace scalar

#if defined(TRUNCG_HAVE_AVX2)
namespace avx2 {
cplx cdotc(const cplx *a, const cplx *b, std::size_t n);
cplx wcdotc(const cplx *a, const cplx *b, const double *w, std::size_t n);
double abs2_sum(const cplx *a, std::size_t n);
}  // namespace avx2
#endif

}  // namespace truncg::kernels
