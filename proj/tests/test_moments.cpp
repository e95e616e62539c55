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
#include "truncg/moments.hpp"
#include "truncg/randstates.hpp"

using namespace truncg;

namespace {

DensityMatrix plus_state() {
  Eigen::VectorXcd ket(2);
  ket << std::numbers::sqrt2 / 2.0, std::numbers::sqrt2 / 2.0;
  return DensityMatrix::pure(ket);
}

// Tr[rho M] with rho padded to d + 2 so that products such as a^dag a keep
// their top level intact.
cplx brute_expectation(const DensityMatrix &rho, const Eigen::MatrixXcd &op) {
  const Eigen::Index big = op.rows();
  return (testing::padded(rho.entries(), big) * op).trace();
}

}  // namespace

TEST_CASE("ladder moments: vacuum, Fock |1> and |+>") {
  const LadderMoments v = ladder_moments(DensityMatrix::vacuum(3));
  CHECK(v.mean_a == cplx(0));
  CHECK(v.mean_a2 == cplx(0));
  CHECK(v.mean_n == 0.0);

  const LadderMoments f = ladder_moments(DensityMatrix::fock(1, 3));
  CHECK(f.mean_a == cplx(0));
  CHECK(f.mean_a2 == cplx(0));
  CHECK(f.mean_n == 1.0);

  const LadderMoments p = ladder_moments(plus_state());
  CHECK(std::abs(p.mean_a - cplx(0.5)) <= 1e-15);
  CHECK(std::abs(p.mean_a2) <= 1e-15);
  CHECK(std::abs(p.mean_n - 0.5) <= 1e-15);
}

TEST_CASE("ladder moments agree with explicit operator matrices") {
  RngStream rng(21, 0);
  for (std::size_t d = 1; d <= 12; ++d) {
    const DensityMatrix rho = sample_density_matrix(d, rng);
    const auto big = static_cast<Eigen::Index>(d + 2);
    const Eigen::MatrixXcd a = testing::ladder(big);
    const LadderMoments lm = ladder_moments(rho);
    CHECK(std::abs(lm.mean_a - brute_expectation(rho, a)) <= 1e-12);
    CHECK(std::abs(lm.mean_a2 - brute_expectation(rho, a * a)) <= 1e-12);
    CHECK(std::abs(lm.mean_n - brute_expectation(rho, a.adjoint() * a).real()) <= 1e-12);
  }
}

TEST_CASE("ladder moments: bounds for truncated states") {
  RngStream rng(22, 0);
  for (std::size_t d = 1; d <= 21; ++d) {
    const LadderMoments lm = ladder_moments(sample_density_matrix(d, rng));
    CHECK(lm.mean_n >= 0.0);
    CHECK(lm.mean_n <= static_cast<double>(d - 1) + 1e-12);
    CHECK(std::norm(lm.mean_a) <= lm.mean_n + 1e-10);
  }
}

TEST_CASE("phase-space moments of reference states") {
  const PhaseSpaceMoments v = phase_space_moments(DensityMatrix::vacuum(2));
  CHECK(v.x1 == 0.0);
  CHECK(v.x2 == 0.0);
  CHECK(v.s11 == 0.5);
  CHECK(v.s22 == 0.5);
  CHECK(v.s12 == 0.0);

  const PhaseSpaceMoments f = phase_space_moments(DensityMatrix::fock(1, 2));
  CHECK(f.s11 == 1.5);
  CHECK(f.s22 == 1.5);
  CHECK(f.s12 == 0.0);

  const PhaseSpaceMoments p = phase_space_moments(plus_state());
  CHECK(std::abs(p.x1 - 1.0 / std::numbers::sqrt2) <= 1e-15);
  CHECK(std::abs(p.x2) <= 1e-15);
  CHECK(std::abs(p.s11 - 0.5) <= 1e-15);
  CHECK(std::abs(p.s22 - 1.0) <= 1e-15);
  CHECK(std::abs(p.s12) <= 1e-15);
  CHECK(p.det() >= 0.25);
}

TEST_CASE("phase-space moments match brute-force quadrature matrices") {
  RngStream rng(23, 0);
  for (std::size_t d = 2; d <= 10; ++d) {
    const DensityMatrix rho = sample_density_matrix(d, rng);
    const auto big = static_cast<Eigen::Index>(d + 2);
    const Eigen::MatrixXcd a = testing::ladder(big);
    const Eigen::MatrixXcd q = (a + a.adjoint()) / std::numbers::sqrt2;
    const Eigen::MatrixXcd p = (a - a.adjoint()) / cplx(0, std::numbers::sqrt2);
    const double mq = brute_expectation(rho, q).real();
    const double mp = brute_expectation(rho, p).real();
    const double s11 = brute_expectation(rho, q * q).real() - mq * mq;
    const double s22 = brute_expectation(rho, p * p).real() - mp * mp;
    const double s12 = 0.5 * brute_expectation(rho, q * p + p * q).real() - mq * mp;
    const PhaseSpaceMoments m = phase_space_moments(rho);
    CHECK(std::abs(m.x1 - mq) <= 1e-12);
    CHECK(std::abs(m.x2 - mp) <= 1e-12);
    CHECK(std::abs(m.s11 - s11) <= 1e-12);
    CHECK(std::abs(m.s22 - s22) <= 1e-12);
    CHECK(std::abs(m.s12 - s12) <= 1e-12);
  }
}

TEST_CASE("uncertainty relation holds for random states") {
  RngStream rng(24, 0);
  for (std::size_t d = 1; d <= 21; ++d) {
    for (int k = 0; k < 10; ++k) {
      CHECK(phase_space_moments(sample_density_matrix(d, rng)).det() >= 0.25 - 1e-10);
    }
  }
}

TEST_CASE("unphysical moments are rejected") {
  LadderMoments lm;
  lm.mean_a = 1.0;  // |<a>|^2 > <a^dag a> = 0
  try {
    phase_space_moments(lm);
    FAIL("expected an invalid-state error");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::InvalidState);
  }
  PhaseSpaceMoments m;
  m.s11 = 0.1;
  m.s22 = 0.1;
  m.s12 = 0.5;
  CHECK_THROWS_AS(symplectic_eigenvalue(m), Error);
}

TEST_CASE("symplectic eigenvalue of vacuum and |1>") {
  CHECK(std::abs(symplectic_eigenvalue(phase_space_moments(DensityMatrix::vacuum(5))) - 0.5) <= 1e-12);
  CHECK(std::abs(symplectic_eigenvalue(phase_space_moments(DensityMatrix::fock(1, 5))) - 1.5) <= 1e-12);
  CHECK(std::abs(symplectic_eigenvalue(phase_space_moments(DensityMatrix::fock(3, 5))) - 3.5) <= 1e-12);
}

TEST_CASE("phase rotation rotates X and conjugates sigma") {
  RngStream rng(25, 0);
  for (int k = 0; k < 20; ++k) {
    const DensityMatrix rho = sample_density_matrix(2 + k % 7, rng);
    const double theta = 2.0 * std::numbers::pi * rng.uniform();
    const PhaseSpaceMoments m = phase_space_moments(rho);
    const PhaseSpaceMoments r = phase_space_moments(rho.phase_rotated(theta));
    // <a> -> e^{i theta} <a>: X rotates by theta.
    const double c = std::cos(theta), s = std::sin(theta);
    CHECK(std::abs(r.x1 - (c * m.x1 - s * m.x2)) <= 1e-10);
    CHECK(std::abs(r.x2 - (s * m.x1 + c * m.x2)) <= 1e-10);
    Eigen::Matrix2d rot;
    rot << c, -s, s, c;
    Eigen::Matrix2d sig;
    sig << m.s11, m.s12, m.s12, m.s22;
    const Eigen::Matrix2d expect = rot * sig * rot.transpose();
    CHECK(std::abs(r.s11 - expect(0, 0)) <= 1e-10);
    CHECK(std::abs(r.s12 - expect(0, 1)) <= 1e-10);
    CHECK(std::abs(r.s22 - expect(1, 1)) <= 1e-10);
    CHECK(std::abs(r.det() - m.det()) <= 1e-10);
    CHECK(std::abs(symplectic_eigenvalue(r) - symplectic_eigenvalue(m)) <= 1e-10);
  }
}
