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

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "truncg/experiment.hpp"

namespace truncg {

/// Published fit constants for the typical non-Gaussianity.
inline constexpr double kReferenceC1 = 1.560;
inline constexpr double kReferenceC2 = 0.309;

/// Typical purity 2 / (N + 2); the exact mean purity under the product measure.
double purity_law(double n_max);

struct FitResult {
  double c1 = 0.0;  ///< exponent
  double c2 = 0.0;  ///< asymptote of the typical non-Gaussianity
  double rss = 0.0;
  std::vector<std::size_t> n_values;
  std::vector<double> per_point_residuals;  ///< mean delta minus model, per row
  bool grid_unimodal = true;  ///< objective unimodal on the scan grid
};

/// Model c2 - (N + 2)^{-c1}.
double nong_law(double n_max, double c1, double c2);
inline double nong_law(double n_max, const FitResult &fr) { return nong_law(n_max, fr.c1, fr.c2); }

struct FitOptions {
  double c1_lo = 0.5;
  double c1_hi = 3.0;
  double tol = 1e-6;
  std::size_t grid_points = 100;
  /// Weight each point by 1 / std^2 instead of uniformly.
  bool weighted = false;
};

/// Separable least squares for mean delta_N = c2 - (N + 2)^{-c1}: for fixed c1
/// the optimal c2 is the (weighted) mean of delta_N + (N + 2)^{-c1}; c1 is
/// bracketed by a grid scan and refined by golden-section search.
/// Throws ErrorKind::InsufficientData with fewer than three rows.
FitResult fit_nong(std::span<const SummaryRow> rows, const FitOptions &opts = {});

/// Fits from bare (N, mean delta) pairs.
FitResult fit_nong(std::span<const std::size_t> n_values, std::span<const double> mean_nong,
                   std::span<const double> weights, const FitOptions &opts = {});

/// c2 - (mu / 2)^{c1}; the relation obtained by eliminating N between the
/// purity and non-Gaussianity laws. Requires 0 <= mu <= 1.
double delta_of_mu(double mu, const FitResult &fr);
double delta_of_mu(double mu, double c1, double c2);

struct PurityResidual {
  std::size_t n_max = 0;
  double residual = 0.0;  ///< mean purity - 2/(N+2)
  double std_error = 0.0;
  bool within(double k = 4.0) const { return std::abs(residual) <= k * std_error; }
};

std::vector<PurityResidual> purity_residuals(std::span<const SummaryRow> rows);

}  // namespace truncg
