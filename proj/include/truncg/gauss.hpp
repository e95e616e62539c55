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
#include <cstddef>

#include <Eigen/Dense>

#include "truncg/density_matrix.hpp"
#include "truncg/moments.hpp"

namespace truncg {

/// Parameters of the closed-form Fock matrix elements of a single-mode
/// Gaussian state with moments (X, sigma):
///
///   <l|tau|m> = K / sqrt(l! m!) sum_k k! C(l,k) C(m,k) At^k
///               (Bt/2)^{(l-k)/2} (Bt*/2)^{(m-k)/2}
///               H_{l-k}(Ct / sqrt(2 Bt)) H_{m-k}(Ct* / sqrt(2 Bt*))
struct GaussianFockParams {
  double A = 0.0;  ///< (s11 + s22 - 1) / 2
  cplx B;          ///< ((s22 - s11) / 2, -s12)
  cplx C;          ///< (x1 + i x2) / sqrt2
  double A_t = 0.0;
  cplx B_t;
  cplx C_t;
  double K = 1.0;
  double denom = 1.0;  ///< (1 + A)^2 - |B|^2
};

/// Fock-basis matrix of a Gaussian state, cropped at dim().
struct GaussianReference {
  Eigen::MatrixXcd entries;
  double trace_deficit = 0.0;  ///< |1 - Tr tau| of the cropped matrix

  std::size_t dim() const { return static_cast<std::size_t>(entries.rows()); }
};

/// tau = D(alpha) S(zeta) nu(n_t) S^dag(zeta) D^dag(alpha) with
/// zeta = r e^{2 i theta} and S(zeta) = exp(zeta a^dag^2 / 2 - zeta* a^2 / 2).
/// theta is the orientation of the anti-squeezed axis of sigma.
struct GaussianDecomposition {
  cplx alpha;
  double r = 0.0;
  double theta = 0.0;
  double n_t = 0.0;
};

struct FockMatrixOptions {
  double trace_tol = 1e-4;
  std::size_t max_dim = 512;
};

/// Throws ErrorKind::InvalidState when (1 + A)^2 - |B|^2 <= 0.
GaussianFockParams gauss_params(const PhaseSpaceMoments &m);

/// Physicists' Hermite polynomial via H_{k+1} = 2z H_k - 2k H_{k-1}.
cplx hermite(unsigned n, cplx z);

/// G_n(Bt, Ct) = (Bt/2)^{n/2} H_n(Ct / sqrt(2 Bt)), evaluated through the
/// branch-free recurrence G_{n+1} = Ct G_n - n Bt G_{n-1}. Entire in Bt; at
/// Bt = 0 it reduces to Ct^n.
cplx scaled_hermite(unsigned n, cplx b_t, cplx c_t);

/// Grows the matrix one Fock level at a time until 1 - Tr tau <= trace_tol.
/// Throws ErrorKind::Convergence if max_dim is reached first.
GaussianReference gaussian_fock_matrix(const GaussianFockParams &p,
                                       const FockMatrixOptions &opts = {});

/// Closed-form matrix elements at a fixed dimension.
GaussianReference gaussian_fock_matrix_fixed(const GaussianFockParams &p, std::size_t dim);

/// Throws ErrorKind::InvalidState when det sigma < 1/4 - kPhysicalityTol.
GaussianDecomposition gaussian_decomposition(const PhaseSpaceMoments &m);

/// Moments (X, sigma) of the Gaussian state with the given decomposition;
/// inverse of gaussian_decomposition().
PhaseSpaceMoments gaussian_moments(const GaussianDecomposition &gd);

/// Independent construction of tau from explicit matrix exponentials of the
/// truncated ladder operators in dimension d_big, cropped to crop_dim
/// (d_big / 4 when zero). Used for verification only.
GaussianReference gaussian_oracle(const GaussianDecomposition &gd, std::size_t d_big,
                                  std::size_t crop_dim = 0);

}  // namespace truncg
