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

// Large-sample statistical checks against published averages. Slow: 1e5
// samples per N, shared by all cases.

#include <doctest.h>

#include <cmath>
#include <map>
#include <thread>

#include "truncg/experiment.hpp"
#include "truncg/fit.hpp"
#include "truncg/moments.hpp"
#include "truncg/randstates.hpp"

using namespace truncg;

namespace {

constexpr std::size_t kSamples = 100000;

// Blocks depend only on (seed, N), so each N is generated on first use.
const std::vector<SampleRecord> &block(std::size_t n) {
  static std::map<std::size_t, std::vector<SampleRecord>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    ExperimentConfig cfg;
    cfg.n_min = cfg.n_max = n;
    cfg.samples_per_n = kSamples;
    cfg.seed = 20090101;
    cfg.workers = std::max(1u, std::thread::hardware_concurrency());
    it = cache.emplace(n, std::move(run_experiment(cfg).front().records)).first;
  }
  return it->second;
}

SummaryRow row(std::size_t n) { return summarize(block(n)); }

double se(const Stat &s, std::size_t count) { return s.std / std::sqrt(static_cast<double>(count)); }

}  // namespace

TEST_CASE("simplex second moment at d = 4") {
  RngStream rng(71, 0);
  double acc = 0.0;
  for (std::size_t i = 0; i < kSamples; ++i) {
    for (double l : sample_simplex(4, rng).lambdas) acc += l * l;
  }
  CHECK(std::abs(acc / kSamples - 0.4) <= 0.01);
}

TEST_CASE("mean symplectic eigenvalue at N = 1") {
  CHECK(std::abs(row(1).sympl_eig.mean - 0.941) <= 0.01);
}

TEST_CASE("mean purity at d = 2 and d = 3") {
  CHECK(std::abs(row(1).purity_rho.mean - 0.666) <= 0.005);
  CHECK(std::abs(row(2).purity_rho.mean - 0.500) <= 0.005);
}

TEST_CASE("purity spread at N = 5") {
  const SummaryRow r = row(5);
  CHECK(std::abs(r.purity_rho.mean - 0.286) <= 0.005);
  CHECK(std::abs(r.purity_rho.std - 0.075) <= 0.005);
}

TEST_CASE("mean overlap at N = 10") {
  CHECK(std::abs(row(10).overlap.mean - 0.080) <= 0.002);
}

TEST_CASE("mean non-Gaussianity at N = 1 and N = 20") {
  CHECK(std::abs(row(1).non_gaussianity.mean - 0.129) <= 0.003);
  CHECK(std::abs(row(20).non_gaussianity.mean - 0.302) <= 0.005);
}

TEST_CASE("N = 7 means within three standard errors") {
  const SummaryRow r = row(7);
  const std::size_t c = r.count;
  CHECK(std::abs(r.purity_rho.mean - 0.222) <= 3 * se(r.purity_rho, c));
  CHECK(std::abs(r.purity_tau.mean - 0.128) <= 3 * se(r.purity_tau, c));
  CHECK(std::abs(r.overlap.mean - 0.111) <= 3 * se(r.overlap, c));
  CHECK(std::abs(r.non_gaussianity.mean - 0.275) <= 3 * se(r.non_gaussianity, c));
  CHECK(std::abs(r.sympl_eig.mean - 3.934) <= 3 * se(r.sympl_eig, c));
}

TEST_CASE("N = 20 purity histogram is unimodal around its mean") {
  const auto &recs = block(20);
  const Histogram h = histogram(recs, Field::Purity, 50);
  CHECK(h.total() == kSamples);
  CHECK(std::abs(h.mode() - 0.091) <= 0.017);
  // Unimodal up to counting noise: no dip deeper than 4 sigma on either side of the peak.
  const auto peak = static_cast<std::size_t>(
      std::max_element(h.counts.begin(), h.counts.end()) - h.counts.begin());
  auto noisy_less = [](double a, double b) { return a < b - 4.0 * std::sqrt(a + b + 1.0); };
  for (std::size_t i = 1; i <= peak; ++i) CHECK_FALSE(noisy_less(h.counts[i], h.counts[i - 1]));
  for (std::size_t i = peak + 1; i < h.counts.size(); ++i) {
    CHECK_FALSE(noisy_less(h.counts[i - 1], h.counts[i]));
  }
}

TEST_CASE("N = 10 non-Gaussianity histogram mean") {
  const Histogram h = histogram(block(10), Field::NonGaussianity, 50);
  CHECK(std::abs(h.binned_mean() - 0.287) <= h.bin_width(0));
}

TEST_CASE("spreads shrink with N except for the symplectic eigenvalue") {
  for (std::size_t n = 2; n <= 20; ++n) {
    const SummaryRow a = row(n - 1), b = row(n);
    CHECK(b.purity_rho.std < a.purity_rho.std);
    CHECK(b.purity_tau.std < a.purity_tau.std);
    CHECK(b.overlap.std < a.overlap.std);
    CHECK(b.non_gaussianity.std < a.non_gaussianity.std);
  }
}

TEST_CASE("fit on the full campaign") {
  std::vector<SummaryRow> rows;
  for (std::size_t n = 1; n <= 20; ++n) rows.push_back(row(n));
  const FitResult fr = fit_nong(rows);
  CHECK(std::abs(fr.c1 - kReferenceC1) <= 0.05);
  CHECK(std::abs(fr.c2 - kReferenceC2) <= 0.01);
  CHECK(fr.grid_unimodal);
  for (const auto &pr : purity_residuals(rows)) CHECK(pr.within(4.0));
}
