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

#include "truncg/randstates.hpp"

#include <cmath>
#include <numbers>

#include "truncg/error.hpp"
#include "truncg/kernels.hpp"

namespace truncg {

double UnitaryMatrix::unitarity_error() const {
  const auto d = entries.rows();
  return (entries.adjoint() * entries - Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff();
}

SimplexPoint sample_simplex(std::size_t d, RngStream &rng) {
  if (d == 0) throw Error(ErrorKind::InvalidDimension, "simplex dimension must be positive");
  SimplexPoint p;
  p.lambdas.resize(d);
  double total = 0.0;
  for (double &x : p.lambdas) {
    x = rng.standard_exponential();
    total += x;
  }
  for (double &x : p.lambdas) x /= total;
  return p;
}

UnitaryMatrix sample_haar_unitary(std::size_t d, RngStream &rng) {
  if (d == 0) throw Error(ErrorKind::InvalidDimension, "unitary dimension must be positive");
  const auto n = static_cast<Eigen::Index>(d);
  Eigen::MatrixXcd ginibre(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      const double re = rng.standard_normal();
      const double im = rng.standard_normal();
      ginibre(i, j) = cplx(re, im) * (1.0 / std::numbers::sqrt2);
    }
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(ginibre);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd &r = qr.matrixQR();
  for (Eigen::Index j = 0; j < n; ++j) {
    const cplx rjj = r(j, j);
    const double mag = std::abs(rjj);
    // A zero pivot has probability zero; leave that column's phase as is.
    if (mag > 0.0) q.col(j) *= rjj / mag;
  }
  return UnitaryMatrix{std::move(q)};
}

DensityMatrix compose_density_matrix(std::span<const double> lambdas, const Eigen::MatrixXcd &u) {
  const auto d = static_cast<Eigen::Index>(lambdas.size());
  if (d == 0 || u.rows() != d || u.cols() != d) {
    throw Error(ErrorKind::InvalidDimension, "spectrum and unitary sizes differ");
  }
  // rho_ij = sum_n lambda_n U_in conj(U_jn); rows of U are columns of U^T.
  const Eigen::MatrixXcd ut = u.transpose();
  Eigen::MatrixXcd rho(d, d);
  for (Eigen::Index j = 0; j < d; ++j) {
    const auto uj = column(ut, j, d);
    for (Eigen::Index i = j; i < d; ++i) {
      rho(i, j) = kernels::wcdotc(column(ut, i, d), uj, lambdas);
    }
    rho(j, j) = rho(j, j).real();
    for (Eigen::Index i = j + 1; i < d; ++i) rho(j, i) = std::conj(rho(i, j));
  }
  return DensityMatrix(std::move(rho));
}

DensityMatrix sample_density_matrix(std::size_t d, RngStream &rng) {
  const SimplexPoint lambda = sample_simplex(d, rng);
  const UnitaryMatrix u = sample_haar_unitary(d, rng);
  return compose_density_matrix(lambda.lambdas, u.entries);
}

}  // namespace truncg
