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

// Self-checks behind `truncg validate`: analytic cases, the oracle
// equivalence of the closed-form Gaussian matrix, invariance properties and
// small statistical checks.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "truncg/gauss.hpp"
#include "truncg/moments.hpp"
#include "truncg/rng.hpp"

namespace truncg {

struct CheckResult {
  std::string name;
  double deviation = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string detail;
};

struct ValidateOptions {
  bool quick = false;
  std::uint64_t seed = 20090101;
  std::size_t workers = 1;
};

std::vector<CheckResult> run_validation(const ValidateOptions &opts);

/// Random physical moments: |alpha| <= 1, r <= 0.6, n_t <= 2, any angles.
PhaseSpaceMoments random_gaussian_moments(RngStream &rng);

/// Max elementwise |closed form - oracle| at the adaptive dimension chosen for
/// trace_tol; the oracle runs in max(4 d_tau, 48) levels.
double oracle_deviation(const PhaseSpaceMoments &m, double trace_tol = 1e-4);

/// Max componentwise |(X, sigma) of tau - target| with tau converged to a
/// trace deficit of 1e-8.
double moment_roundtrip_deviation(const PhaseSpaceMoments &m);

}  // namespace truncg
