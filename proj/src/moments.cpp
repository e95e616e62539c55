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

#include "truncg/moments.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "truncg/error.hpp"

namespace truncg {

LadderMoments ladder_moments(const Eigen::MatrixXcd &rho) {
  const Eigen::Index d = rho.rows();
  LadderMoments lm;
  for (Eigen::Index n = 0; n < d; ++n) {
    const double dn = static_cast<double>(n);
    lm.mean_n += dn * rho(n, n).real();
    if (n >= 1) lm.mean_a += std::sqrt(dn) * rho(n, n - 1);
    if (n >= 2) lm.mean_a2 += std::sqrt(dn * (dn - 1.0)) * rho(n, n - 2);
  }
  return lm;
}

PhaseSpaceMoments phase_space_moments(const LadderMoments &lm) {
  PhaseSpaceMoments m;
  m.x1 = std::numbers::sqrt2 * lm.mean_a.real();
  m.x2 = std::numbers::sqrt2 * lm.mean_a.imag();
  m.s11 = lm.mean_a2.real() + lm.mean_n + 0.5 - m.x1 * m.x1;
  m.s22 = -lm.mean_a2.real() + lm.mean_n + 0.5 - m.x2 * m.x2;
  m.s12 = lm.mean_a2.imag() - m.x1 * m.x2;
  if (!(m.s11 > 0.0) || !(m.s22 > 0.0) || m.det() < 0.25 - kPhysicalityTol) {
    throw Error(ErrorKind::InvalidState,
                "covariance violates the uncertainty relation (det sigma = " +
                    std::to_string(m.det()) + ")");
  }
  return m;
}

double symplectic_eigenvalue(const PhaseSpaceMoments &m) {
  const double det = m.det();
  if (det < 0.0) throw Error(ErrorKind::InvalidState, "negative covariance determinant");
  return std::sqrt(det);
}

}  // namespace truncg
