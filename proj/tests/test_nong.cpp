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

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "test_util.hpp"
#include "truncg/error.hpp"
#include "truncg/nong.hpp"
#include "truncg/randstates.hpp"

using namespace truncg;

TEST_CASE("purity: pure and mixed states") {
  CHECK(purity(DensityMatrix::vacuum(3)) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(purity(DensityMatrix::maximally_mixed(4)) == doctest::Approx(0.25).epsilon(1e-15));
  Eigen::MatrixXcd m(2, 2);
  m << 0.75, 0.25, 0.25, 0.25;
  // 0.5625 + 2 * 0.0625 + 0.0625
  CHECK(purity(m) == doctest::Approx(0.75).epsilon(1e-15));
}

TEST_CASE("overlap: symmetric, zero-padded, and zero for orthogonal states") {
  const DensityMatrix f0 = DensityMatrix::fock(0, 3);
  const DensityMatrix f2 = DensityMatrix::fock(2, 3);
  CHECK(overlap(f0.entries(), f2.entries()) == 0.0);
  CHECK(hs_distance_sq(purity(f0), purity(f2), overlap(f0.entries(), f2.entries())) ==
        doctest::Approx(1.0));

  RngStream rng(41, 0);
  const DensityMatrix a = sample_density_matrix(4, rng);
  const DensityMatrix b = sample_density_matrix(7, rng);
  const double ab = overlap(a.entries(), b.entries());
  CHECK(std::abs(ab - overlap(b.entries(), a.entries())) <= 1e-15);
  const Eigen::MatrixXcd pa = testing::padded(a.entries(), 7);
  CHECK(std::abs(ab - (pa * b.entries()).trace().real()) <= 1e-14);
  CHECK(std::abs(overlap(a.entries(), a.entries()) - purity(a)) <= 1e-15);
}

TEST_CASE("hs distance: clamps tiny negatives, rejects real ones") {
  CHECK(hs_distance_sq(1.0, 1.0, 1.0) == 0.0);
  CHECK(hs_distance_sq(1.0, 1.0, 1.0 + 5e-13) == 0.0);
  try {
    hs_distance_sq(1.0, 1.0, 1.0 + 1e-9);
    FAIL("expected a numerical error");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::Numerical);
  }
  CHECK(hs_distance_sq(0.5, 0.25, 0.125) == doctest::Approx(0.25));
}

TEST_CASE("non-Gaussianity of the vacuum is zero") {
  const SampleRecord r = non_gaussianity(DensityMatrix::vacuum(1));
  CHECK(r.purity_rho == 1.0);
  CHECK(r.purity_tau == 1.0);
  CHECK(r.non_gaussianity == 0.0);
  CHECK(r.sympl_eig == 0.5);
  CHECK(r.n_max == 0);
}

TEST_CASE("non-Gaussianity of |1> against its thermal reference is 5/12") {
  const SampleRecord r = non_gaussianity(DensityMatrix::fock(1, 2), {1e-12, 512});
  CHECK(r.purity_tau == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
  CHECK(r.overlap == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(r.non_gaussianity == doctest::Approx(5.0 / 12.0).epsilon(1e-10));
  CHECK(r.sympl_eig == doctest::Approx(1.5));
}

TEST_CASE("stored record satisfies the defining identity") {
  RngStream rng(42, 0);
  for (std::size_t d = 1; d <= 21; d += 2) {
    const SampleRecord r = non_gaussianity(sample_density_matrix(d, rng));
    const double expect = 0.5 * (r.purity_rho + r.purity_tau - 2.0 * r.overlap) / r.purity_rho;
    CHECK(std::abs(r.non_gaussianity - std::max(0.0, expect)) <= 1e-15);
    CHECK(r.non_gaussianity >= 0.0);
    CHECK(r.n_max == d - 1);
    CHECK(r.sympl_eig >= 0.5 - 1e-10);
  }
}

TEST_CASE("a (numerically) Gaussian input has vanishing non-Gaussianity") {
  const cplx alpha(0.5, -0.3);
  const Eigen::Index d = 30;
  Eigen::VectorXcd ket(d);
  for (Eigen::Index n = 0; n < d; ++n) {
    ket(n) = std::exp(-std::norm(alpha) / 2.0) * std::pow(alpha, static_cast<double>(n)) /
             std::sqrt(std::tgamma(n + 1.0));
  }
  ket /= ket.norm();
  const SampleRecord r = non_gaussianity(DensityMatrix::pure(ket), {1e-12, 512});
  CHECK(r.non_gaussianity <= 1e-10);
  CHECK(r.sympl_eig == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("non-Gaussianity is invariant under phase rotation") {
  RngStream rng(43, 0);
  for (int i = 0; i < 10; ++i) {
    const DensityMatrix rho = sample_density_matrix(2 + i, rng);
    const double base = non_gaussianity(rho).non_gaussianity;
    for (double theta : {0.3, 1.7, -2.9}) {
      CHECK(std::abs(non_gaussianity(rho.phase_rotated(theta)).non_gaussianity - base) <= 1e-8);
    }
  }
}

TEST_CASE("analyze_state exposes consistent intermediates") {
  RngStream rng(44, 0);
  const DensityMatrix rho = sample_density_matrix(6, rng);
  const StateAnalysis sa = analyze_state(rho);
  CHECK(sa.reference.trace_deficit <= 1e-4);
  CHECK(sa.record.purity_tau == purity(sa.reference));
  CHECK(sa.record.sympl_eig == doctest::Approx(std::sqrt(sa.moments.det())));
  CHECK(sa.record.non_gaussianity ==
        doctest::Approx(hs_distance_sq(rho, sa.reference) / purity(rho)).epsilon(1e-14));
}
