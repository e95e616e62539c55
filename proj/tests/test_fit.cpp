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
#include <random>

#include "truncg/error.hpp"
#include "truncg/fit.hpp"

using namespace truncg;

namespace {

std::vector<SummaryRow> synthetic_rows(double c1, double c2, double noise, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> nd(0.0, 1.0);
  std::vector<SummaryRow> rows;
  for (std::size_t n = 1; n <= 20; ++n) {
    SummaryRow r;
    r.n_max = n;
    r.count = 10000;
    r.non_gaussianity.mean = nong_law(static_cast<double>(n), c1, c2) + noise * nd(gen);
    r.non_gaussianity.std = 0.05;
    r.purity_rho.mean = purity_law(static_cast<double>(n));
    r.purity_rho.std = 0.1;
    rows.push_back(r);
  }
  return rows;
}

double rss_at(const std::vector<SummaryRow> &rows, double c1, double c2) {
  double s = 0.0;
  for (const auto &r : rows) {
    const double d = r.non_gaussianity.mean - nong_law(static_cast<double>(r.n_max), c1, c2);
    s += d * d;
  }
  return s;
}

}  // namespace

TEST_CASE("purity law") {
  CHECK(purity_law(2) == 0.5);
  CHECK(purity_law(18) == doctest::Approx(0.1));
  CHECK(purity_law(1) == doctest::Approx(2.0 / 3.0));
  CHECK_THROWS_AS(purity_law(0), Error);
}

TEST_CASE("nong law and its purity form") {
  CHECK(nong_law(2, kReferenceC1, kReferenceC2) == doctest::Approx(0.194).epsilon(1e-3));
  CHECK(std::abs(nong_law(200, kReferenceC1, kReferenceC2) - kReferenceC2) <= 5e-4);
  for (std::size_t n = 1; n <= 50; ++n) {
    const double mu = purity_law(static_cast<double>(n));
    CHECK(std::abs(delta_of_mu(mu, kReferenceC1, kReferenceC2) -
                   nong_law(static_cast<double>(n), kReferenceC1, kReferenceC2)) <= 1e-12);
  }
  CHECK(delta_of_mu(0.5, kReferenceC1, kReferenceC2) == doctest::Approx(0.194).epsilon(1e-3));
  CHECK(delta_of_mu(0.0, kReferenceC1, kReferenceC2) == kReferenceC2);
  CHECK(delta_of_mu(1e-9, kReferenceC1, kReferenceC2) == doctest::Approx(kReferenceC2));
  CHECK_THROWS_AS(delta_of_mu(1.1, 1.0, 0.3), Error);
  CHECK_THROWS_AS(delta_of_mu(-0.1, 1.0, 0.3), Error);
}

TEST_CASE("fit recovers noiseless parameters") {
  for (auto [c1, c2] : {std::pair{1.56, 0.309}, std::pair{0.8, 0.2}, std::pair{2.5, 0.5}}) {
    const auto rows = synthetic_rows(c1, c2, 0.0, 1);
    const FitResult fr = fit_nong(rows);
    CHECK(std::abs(fr.c1 - c1) <= 1e-5);
    CHECK(std::abs(fr.c2 - c2) <= 1e-5);
    CHECK(fr.rss <= 1e-12);
    CHECK(fr.grid_unimodal);
    CHECK(fr.n_values.size() == 20);
    CHECK(fr.per_point_residuals.size() == 20);
  }
}

TEST_CASE("noisy fit sits at a stationary minimum of the residual sum") {
  const auto rows = synthetic_rows(1.56, 0.309, 1e-3, 2);
  const FitResult fr = fit_nong(rows);
  CHECK(std::abs(fr.rss - rss_at(rows, fr.c1, fr.c2)) <= 1e-15);
  const double h = 1e-4;
  for (double dc1 : {-h, 0.0, h}) {
    for (double dc2 : {-h, 0.0, h}) {
      CHECK(rss_at(rows, fr.c1 + dc1, fr.c2 + dc2) >= fr.rss - 1e-15);
    }
  }
  CHECK(std::abs(fr.c1 - 1.56) <= 0.2);
  CHECK(std::abs(fr.c2 - 0.309) <= 0.01);
  double sum = 0.0;
  for (double r : fr.per_point_residuals) sum += r;
  // The optimal c2 makes the (unweighted) residuals sum to zero.
  CHECK(std::abs(sum) <= 1e-12);
}

TEST_CASE("weighted fit") {
  auto rows = synthetic_rows(1.56, 0.309, 0.0, 3);
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i].non_gaussianity.std = 0.01 * (1 + i % 4);
  FitOptions opts;
  opts.weighted = true;
  const FitResult fr = fit_nong(rows, opts);
  CHECK(std::abs(fr.c1 - 1.56) <= 1e-5);
  CHECK(std::abs(fr.c2 - 0.309) <= 1e-5);

  rows[4].non_gaussianity.std = 0.0;
  CHECK_THROWS_AS(fit_nong(rows, opts), Error);
}

TEST_CASE("fit input errors") {
  const auto rows = synthetic_rows(1.56, 0.309, 0.0, 4);
  try {
    fit_nong(std::span<const SummaryRow>(rows.data(), 2));
    FAIL("expected insufficient data");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::InsufficientData);
  }
  const std::vector<std::size_t> n{1, 2, 3};
  const std::vector<double> y{0.1, 0.2}, w{1, 1, 1};
  CHECK_THROWS_AS(fit_nong(n, y, w), Error);
  FitOptions bad;
  bad.c1_hi = bad.c1_lo;
  CHECK_THROWS_AS(fit_nong(rows, bad), Error);
}

TEST_CASE("purity residuals") {
  auto rows = synthetic_rows(1.56, 0.309, 0.0, 5);
  rows[0].purity_rho.mean += 0.003;
  const auto res = purity_residuals(rows);
  REQUIRE(res.size() == 20);
  CHECK(res[0].residual == doctest::Approx(0.003));
  CHECK(res[0].std_error == doctest::Approx(0.001));
  CHECK(res[0].within(4.0));
  CHECK_FALSE(res[0].within(2.0));
  CHECK(res[5].residual == doctest::Approx(0.0));
}
