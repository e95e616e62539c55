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

#include "truncg/nong.hpp"

#include <algorithm>
#include <string>

#include "truncg/error.hpp"
#include "truncg/kernels.hpp"

namespace truncg {

double purity(const Eigen::MatrixXcd &m) {
  return kernels::abs2_sum(std::span<const cplx>(m.data(), static_cast<std::size_t>(m.size())));
}

double overlap(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
  const Eigen::Index d = std::min(a.rows(), b.rows());
  double acc = 0.0;
  for (Eigen::Index k = 0; k < d; ++k) {
    acc += kernels::cdotc(column(a, k, d), column(b, k, d)).real();
  }
  return acc;
}

double hs_distance_sq(double purity_rho, double purity_tau, double overlap) {
  const double d2 = 0.5 * (purity_rho + purity_tau - 2.0 * overlap);
  if (d2 < 0.0) {
    if (d2 < -1e-12) {
      throw Error(ErrorKind::Numerical,
                  "negative Hilbert-Schmidt distance " + std::to_string(d2));
    }
    return 0.0;
  }
  return d2;
}

double hs_distance_sq(const DensityMatrix &rho, const GaussianReference &tau) {
  return hs_distance_sq(purity(rho), purity(tau), overlap(rho, tau));
}

StateAnalysis analyze_state(const DensityMatrix &rho, const FockMatrixOptions &opts) {
  StateAnalysis out;
  out.moments = phase_space_moments(rho);
  out.params = gauss_params(out.moments);
  out.reference = gaussian_fock_matrix(out.params, opts);

  SampleRecord &rec = out.record;
  rec.n_max = rho.n_max();
  rec.purity_rho = purity(rho);
  rec.purity_tau = purity(out.reference);
  rec.overlap = overlap(rho, out.reference);
  rec.non_gaussianity = hs_distance_sq(rec.purity_rho, rec.purity_tau, rec.overlap) / rec.purity_rho;
  rec.sympl_eig = symplectic_eigenvalue(out.moments);
  return out;
}

}  // namespace truncg
