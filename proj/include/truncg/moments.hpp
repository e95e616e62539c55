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

#include <complex>

#include <Eigen/Dense>

#include "truncg/density_matrix.hpp"

namespace truncg {

/// <a>, <a^2> and <a^dag a> of a single-mode state.
struct LadderMoments {
  cplx mean_a;
  cplx mean_a2;
  double mean_n = 0.0;
};

/// Mean vector X = (<q>, <p>) and symmetric covariance sigma, with
/// q = (a + a^dag)/sqrt2, p = (a - a^dag)/(i sqrt2), [q, p] = i, so the vacuum
/// has sigma = I/2.
struct PhaseSpaceMoments {
  double x1 = 0.0;
  double x2 = 0.0;
  double s11 = 0.5;
  double s12 = 0.0;
  double s22 = 0.5;

  double det() const { return s11 * s22 - s12 * s12; }
};

/// Tolerance on the uncertainty relation det(sigma) >= 1/4.
inline constexpr double kPhysicalityTol = 1e-10;

/// Exact Fock-basis sums: <a> = sum sqrt(n) rho_{n,n-1},
/// <a^2> = sum sqrt(n(n-1)) rho_{n,n-2}, <a^dag a> = sum n rho_nn.
/// Works for any square matrix; a truncated state has no support above N so
/// nothing is lost.
LadderMoments ladder_moments(const Eigen::MatrixXcd &rho);
inline LadderMoments ladder_moments(const DensityMatrix &rho) {
  return ladder_moments(rho.entries());
}

/// Throws ErrorKind::InvalidState when sigma violates the uncertainty
/// relation by more than kPhysicalityTol.
PhaseSpaceMoments phase_space_moments(const LadderMoments &lm);
inline PhaseSpaceMoments phase_space_moments(const DensityMatrix &rho) {
  return phase_space_moments(ladder_moments(rho));
}

/// sqrt(det sigma); at least 1/2 for physical states.
double symplectic_eigenvalue(const PhaseSpaceMoments &m);

}  // namespace truncg
