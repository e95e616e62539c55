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

#include <cstddef>

#include <Eigen/Dense>

#include "truncg/density_matrix.hpp"
#include "truncg/gauss.hpp"
#include "truncg/moments.hpp"

namespace truncg {

/// Per-state measurements.
struct SampleRecord {
  std::size_t n_max = 0;
  double purity_rho = 0.0;
  double purity_tau = 0.0;
  double overlap = 0.0;
  double non_gaussianity = 0.0;
  double sympl_eig = 0.0;
};

/// Tr[M^2] = sum |M_nk|^2 for Hermitian M.
double purity(const Eigen::MatrixXcd &m);
inline double purity(const DensityMatrix &rho) { return purity(rho.entries()); }
inline double purity(const GaussianReference &tau) { return purity(tau.entries); }

/// Re Tr[a b] for Hermitian a, b. The smaller matrix is zero-padded, so only
/// the common top-left block contributes.
double overlap(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b);
inline double overlap(const DensityMatrix &rho, const GaussianReference &tau) {
  return overlap(rho.entries(), tau.entries);
}

/// (mu_rho + mu_tau - 2 kappa) / 2. Values below zero by less than 1e-12 are
/// clamped; anything more negative throws ErrorKind::Numerical.
double hs_distance_sq(double purity_rho, double purity_tau, double overlap);
double hs_distance_sq(const DensityMatrix &rho, const GaussianReference &tau);

/// Intermediate products of one non-Gaussianity evaluation.
struct StateAnalysis {
  PhaseSpaceMoments moments;
  GaussianFockParams params;
  GaussianReference reference;
  SampleRecord record;
};

StateAnalysis analyze_state(const DensityMatrix &rho, const FockMatrixOptions &opts = {});

/// Moments, reference Gaussian and delta = D_HS^2[rho, tau] / mu[rho].
inline SampleRecord non_gaussianity(const DensityMatrix &rho, const FockMatrixOptions &opts = {}) {
  return analyze_state(rho, opts).record;
}

}  // namespace truncg
