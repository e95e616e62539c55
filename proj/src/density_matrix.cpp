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

#include "truncg/density_matrix.hpp"

#include <cmath>
#include <string>

#include "truncg/error.hpp"

namespace truncg {

DensityMatrix::DensityMatrix(Eigen::MatrixXcd entries) : entries_(std::move(entries)) {
  if (entries_.rows() == 0 || entries_.rows() != entries_.cols()) {
    throw Error(ErrorKind::InvalidDimension, "density matrix must be square and non-empty");
  }
  const Eigen::Index d = entries_.rows();
  double herm = 0.0;
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index i = j; i < d; ++i) {
      herm = std::max(herm, std::abs(entries_(i, j) - std::conj(entries_(j, i))));
    }
  }
  if (herm > kHermitianTol) {
    throw Error(ErrorKind::InvalidState, "matrix is not Hermitian (deviation " +
                                             std::to_string(herm) + ")");
  }
  const double tr = entries_.trace().real();
  if (std::abs(tr - 1.0) > kTraceTol) {
    throw Error(ErrorKind::InvalidState, "trace is " + std::to_string(tr) + ", expected 1");
  }
}

DensityMatrix DensityMatrix::vacuum(std::size_t dim) { return fock(0, dim); }

DensityMatrix DensityMatrix::fock(std::size_t n, std::size_t dim) {
  if (dim == 0 || n >= dim) {
    throw Error(ErrorKind::InvalidDimension, "Fock index outside the truncated space");
  }
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                              static_cast<Eigen::Index>(dim));
  m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)) = 1.0;
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  if (dim == 0) throw Error(ErrorKind::InvalidDimension, "dimension must be positive");
  const auto d = static_cast<Eigen::Index>(dim);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(d, d) / static_cast<double>(dim);
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::pure(const Eigen::VectorXcd &ket) {
  if (ket.size() == 0) throw Error(ErrorKind::InvalidDimension, "empty ket");
  Eigen::MatrixXcd m = ket * ket.adjoint();
  // Exact Hermiticity; the outer product can differ from its adjoint in the last ulp.
  m = (0.5 * (m + m.adjoint())).eval();
  return DensityMatrix(std::move(m));
}

double DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(entries_, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

DensityMatrix DensityMatrix::phase_rotated(double theta) const {
  // <n|e^{i theta N} rho e^{-i theta N}|k> = e^{i theta (n - k)} rho_nk
  Eigen::MatrixXcd m = entries_;
  const Eigen::Index d = m.rows();
  for (Eigen::Index k = 0; k < d; ++k) {
    for (Eigen::Index n = 0; n < d; ++n) {
      if (n != k) m(n, k) *= std::polar(1.0, theta * static_cast<double>(n - k));
    }
  }
  return DensityMatrix(std::move(m));
}

}  // namespace truncg
