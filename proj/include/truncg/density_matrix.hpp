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
#include <span>

#include <Eigen/Dense>

namespace truncg {

using cplx = std::complex<double>;

/// Truncated single-mode state in the Fock basis |0>..|N>, d = N + 1.
///
/// Construction checks Hermiticity (1e-12) and unit trace (1e-12). Positive
/// semidefiniteness needs an eigensolve and is checked separately by
/// min_eigenvalue() / is_positive().
class DensityMatrix {
 public:
  static constexpr double kHermitianTol = 1e-12;
  static constexpr double kTraceTol = 1e-12;
  static constexpr double kPsdTol = 1e-10;

  explicit DensityMatrix(Eigen::MatrixXcd entries);

  static DensityMatrix vacuum(std::size_t dim);
  static DensityMatrix fock(std::size_t n, std::size_t dim);
  static DensityMatrix maximally_mixed(std::size_t dim);
  /// |psi><psi| for a normalized ket.
  static DensityMatrix pure(const Eigen::VectorXcd &ket);

  std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
  std::size_t n_max() const { return dim() - 1; }

  const Eigen::MatrixXcd &entries() const { return entries_; }
  cplx operator()(std::size_t n, std::size_t k) const {
    return entries_(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(k));
  }

  double min_eigenvalue() const;
  bool is_positive() const { return min_eigenvalue() >= -kPsdTol; }

  /// e^{i theta a^dag a} rho e^{-i theta a^dag a}
  DensityMatrix phase_rotated(double theta) const;

 private:
  Eigen::MatrixXcd entries_;
};

/// Column k of a column-major complex matrix as a contiguous span.
inline std::span<const cplx> column(const Eigen::MatrixXcd &m, Eigen::Index k,
                                    Eigen::Index rows) {
  return {m.col(k).data(), static_cast<std::size_t>(rows)};
}

}  // namespace truncg
