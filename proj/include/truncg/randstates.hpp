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
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "truncg/density_matrix.hpp"
#include "truncg/rng.hpp"

namespace truncg {

/// Point on the probability simplex: d non-negative weights summing to one.
struct SimplexPoint {
  std::vector<double> lambdas;

  std::size_t dim() const { return lambdas.size(); }
};

struct UnitaryMatrix {
  Eigen::MatrixXcd entries;

  std::size_t dim() const { return static_cast<std::size_t>(entries.rows()); }
  /// max_ij |(U^dag U - I)_ij|
  double unitarity_error() const;
};

/// Uniform (Lebesgue) point on the (d-1)-simplex, i.e. Dirichlet(1,...,1),
/// drawn as d standard exponentials normalized by their sum.
SimplexPoint sample_simplex(std::size_t d, RngStream &rng);

/// Haar-distributed unitary from the QR factorization of a complex Ginibre
/// matrix, with the columns of Q rephased by r_jj / |r_jj|.
UnitaryMatrix sample_haar_unitary(std::size_t d, RngStream &rng);

/// rho = U diag(lambda) U^dag with lambda uniform on the simplex and U Haar.
DensityMatrix sample_density_matrix(std::size_t d, RngStream &rng);

/// U diag(lambda) U^dag, Hermitian by construction.
DensityMatrix compose_density_matrix(std::span<const double> lambdas, const Eigen::MatrixXcd &u);

}  // namespace truncg
