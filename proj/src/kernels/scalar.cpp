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

#include "truncg/kernels.hpp"

namespace truncg::kernels::scalar {

cplx cdotc(const cplx *a, const cplx *b, std::size_t n) {
  double re = 0.0, im = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    re += a[k].real() * b[k].real() + a[k].imag() * b[k].imag();
    im += a[k].imag() * b[k].real() - a[k].real() * b[k].imag();
  }
  return {re, im};
}

cplx wcdotc(const cplx *a, const cplx *b, const double *w, std::size_t n) {
  double re = 0.0, im = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double ar = w[k] * a[k].real();
    const double ai = w[k] * a[k].imag();
    re += ar * b[k].real() + ai * b[k].imag();
    im += ai * b[k].real() - ar * b[k].imag();
  }
  return {re, im};
}

double abs2_sum(const cplx *a, std::size_t n) {
  double s = 0.0;
  for (std::size_t k = 0; k < n; ++k) s += a[k].real() * a[k].real() + a[k].imag() * a[k].imag();
  return s;
}

}  // namespace truncg::kernels::scalar
