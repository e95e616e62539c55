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

#include "truncg/validation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <limits>
#include <sstream>

#include "truncg/experiment.hpp"
#include "truncg/fit.hpp"
#include "truncg/kernels.hpp"
#include "truncg/nong.hpp"
#include "truncg/randstates.hpp"

namespace truncg {

PhaseSpaceMoments random_gaussian_moments(RngStream &rng) {
  GaussianDecomposition gd;
  gd.alpha = std::polar(std::sqrt(rng.uniform()), 2.0 * std::numbers::pi * rng.uniform());
  gd.r = 0.6 * rng.uniform();
  gd.theta = std::numbers::pi * rng.uniform();
  gd.n_t = 2.0 * rng.uniform();
  return gaussian_moments(gd);
}

double oracle_deviation(const PhaseSpaceMoments &m, double trace_tol) {
  const GaussianReference closed = gaussian_fock_matrix(gauss_params(m), {trace_tol, 512});
  const std::size_t d = closed.dim();
  const GaussianReference oracle =
      gaussian_oracle(gaussian_decomposition(m), std::max<std::size_t>(4 * d, 48), d);
  return (closed.entries - oracle.entries).cwiseAbs().maxCoeff();
}

double moment_roundtrip_deviation(const PhaseSpaceMoments &m) {
  const GaussianReference tau = gaussian_fock_matrix(gauss_params(m), {1e-8, 512});
  const PhaseSpaceMoments back = phase_space_moments(ladder_moments(tau.entries));
  return std::max({std::abs(back.x1 - m.x1), std::abs(back.x2 - m.x2), std::abs(back.s11 - m.s11),
                   std::abs(back.s12 - m.s12), std::abs(back.s22 - m.s22)});
}

namespace {

class Report {
 public:
  void add(std::string name, double deviation, double tolerance, std::string detail = {}) {
    CheckResult c;
    c.name = std::move(name);
    c.deviation = deviation;
    c.tolerance = tolerance;
    c.passed = std::isfinite(deviation) && deviation <= tolerance;
    c.detail = std::move(detail);
    results_.push_back(std::move(c));
  }

  // Runs `fn`, recording a failure instead of propagating library errors.
  template <class Fn>
  void guarded(const std::string &name, double tolerance, Fn &&fn) {
    try {
      fn();
    } catch (const std::exception &e) {
      add(name, std::numeric_limits<double>::infinity(), tolerance, e.what());
    }
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::vector<CheckResult> results_;
};

}  // namespace

std::vector<CheckResult> run_validation(const ValidateOptions &opts) {
  Report rep;
  RngStream rng(opts.seed, 0xC0FFEE);

  rep.guarded("symplectic eigenvalue of vacuum is 1/2", 1e-12, [&] {
    const double s = symplectic_eigenvalue(phase_space_moments(DensityMatrix::vacuum(4)));
    rep.add("symplectic eigenvalue of vacuum is 1/2", std::abs(s - 0.5), 1e-12);
  });
  rep.guarded("symplectic eigenvalue of |1> is 3/2", 1e-12, [&] {
    const double s = symplectic_eigenvalue(phase_space_moments(DensityMatrix::fock(1, 4)));
    rep.add("symplectic eigenvalue of |1> is 3/2", std::abs(s - 1.5), 1e-12);
  });
  rep.guarded("non-Gaussianity of vacuum is 0", 1e-6, [&] {
    const double d = non_gaussianity(DensityMatrix::vacuum(3)).non_gaussianity;
    rep.add("non-Gaussianity of vacuum is 0", std::abs(d), 1e-6);
  });
  rep.guarded("non-Gaussianity of |1> is 5/12", 1e-6, [&] {
    const double d = non_gaussianity(DensityMatrix::fock(1, 2)).non_gaussianity;
    rep.add("non-Gaussianity of |1> is 5/12", std::abs(d - 5.0 / 12.0), 1e-6);
  });
  rep.guarded("reference of |1> is thermal with diagonal 2^-(l+1)", 1e-8, [&] {
    const GaussianReference tau =
        gaussian_fock_matrix(gauss_params(phase_space_moments(DensityMatrix::fock(1, 2))));
    double dev = 0.0;
    for (Eigen::Index l = 0; l < tau.entries.rows(); ++l) {
      for (Eigen::Index m = 0; m < tau.entries.cols(); ++m) {
        const double expect = l == m ? std::pow(0.5, static_cast<double>(l + 1)) : 0.0;
        dev = std::max(dev, std::abs(tau.entries(l, m) - expect));
      }
    }
    rep.add("reference of |1> is thermal with diagonal 2^-(l+1)", dev, 1e-8);
  });

  const std::size_t n_oracle = opts.quick ? 5 : 20;
  rep.guarded("closed-form Gaussian matches matrix-exponential oracle", 1e-6, [&] {
    double dev = 0.0;
    for (std::size_t i = 0; i < n_oracle; ++i) {
      const DensityMatrix rho = sample_density_matrix(2 + i % 5, rng);
      dev = std::max(dev, oracle_deviation(phase_space_moments(rho)));
    }
    rep.add("closed-form Gaussian matches matrix-exponential oracle", dev, 1e-6,
            std::to_string(n_oracle) + " random states, N <= 5");
  });

  const std::size_t n_round = opts.quick ? 10 : 50;
  rep.guarded("reference Gaussian reproduces target moments", 1e-3, [&] {
    double dev = 0.0;
    for (std::size_t i = 0; i < n_round; ++i) {
      const PhaseSpaceMoments m = i % 2 == 0
                                      ? random_gaussian_moments(rng)
                                      : phase_space_moments(sample_density_matrix(2 + i % 5, rng));
      dev = std::max(dev, moment_roundtrip_deviation(m));
    }
    rep.add("reference Gaussian reproduces target moments", dev, 1e-3,
            std::to_string(n_round) + " inputs");
  });

  rep.guarded("phase-rotation invariance of non-Gaussianity", 1e-8, [&] {
    double dev = 0.0;
    for (std::size_t i = 0; i < 10; ++i) {
      const DensityMatrix rho = sample_density_matrix(2 + i % 6, rng);
      const double theta = 2.0 * std::numbers::pi * rng.uniform();
      const double a = non_gaussianity(rho).non_gaussianity;
      const double b = non_gaussianity(rho.phase_rotated(theta)).non_gaussianity;
      dev = std::max(dev, std::abs(a - b));
    }
    rep.add("phase-rotation invariance of non-Gaussianity", dev, 1e-8);
  });

  rep.guarded("Haar unitarity", 1e-10, [&] {
    double dev = 0.0;
    for (std::size_t d = 1; d <= 21; ++d) {
      for (int k = 0; k < 10; ++k) dev = std::max(dev, sample_haar_unitary(d, rng).unitarity_error());
    }
    rep.add("Haar unitarity", dev, 1e-10, "10 draws per d = 1..21");
  });

  rep.guarded("simplex normalization", 1e-12, [&] {
    double dev = 0.0;
    for (std::size_t d = 1; d <= 21; ++d) {
      for (int k = 0; k < 10; ++k) {
        const SimplexPoint p = sample_simplex(d, rng);
        double sum = 0.0;
        for (double x : p.lambdas) {
          sum += x;
          if (x < 0.0) dev = std::max(dev, -x + 1.0);
        }
        dev = std::max(dev, std::abs(sum - 1.0));
      }
    }
    rep.add("simplex normalization", dev, 1e-12);
  });

  rep.guarded("sampled states are positive semidefinite", DensityMatrix::kPsdTol, [&] {
    double worst = 0.0;
    for (std::size_t d = 1; d <= 21; ++d) {
      worst = std::min(worst, sample_density_matrix(d, rng).min_eigenvalue());
    }
    rep.add("sampled states are positive semidefinite", std::max(0.0, -worst), DensityMatrix::kPsdTol);
  });

  rep.guarded("results independent of worker count", 0.0, [&] {
    ExperimentConfig cfg;
    cfg.n_min = 1;
    cfg.n_max = 3;
    cfg.samples_per_n = 300;
    cfg.chunk_size = 64;
    cfg.seed = opts.seed;
    cfg.workers = 1;
    const auto a = run_experiment(cfg);
    cfg.workers = std::max<std::size_t>(opts.workers, 3);
    const auto b = run_experiment(cfg);
    std::size_t mismatches = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
      for (std::size_t i = 0; i < a[k].records.size(); ++i) {
        const auto &x = a[k].records[i];
        const auto &y = b[k].records[i];
        if (x.purity_rho != y.purity_rho || x.purity_tau != y.purity_tau ||
            x.overlap != y.overlap || x.non_gaussianity != y.non_gaussianity ||
            x.sympl_eig != y.sympl_eig) {
          ++mismatches;
        }
      }
    }
    rep.add("results independent of worker count", static_cast<double>(mismatches), 0.0,
            "workers 1 vs " + std::to_string(cfg.workers));
  });

  rep.guarded("mean purity follows 2/(N+2)", 4.0, [&] {
    ExperimentConfig cfg;
    cfg.n_min = 1;
    cfg.n_max = opts.quick ? 5 : 20;
    cfg.samples_per_n = opts.quick ? 500 : 2000;
    cfg.seed = opts.seed;
    cfg.workers = opts.workers;
    std::vector<SummaryRow> rows;
    for (const auto &blk : run_experiment(cfg)) rows.push_back(summarize(blk.records));
    double worst = 0.0;
    for (const auto &pr : purity_residuals(rows)) {
      worst = std::max(worst, std::abs(pr.residual) / pr.std_error);
    }
    std::ostringstream d;
    d << "worst |residual| / std error over N = 1.." << cfg.n_max << ", " << cfg.samples_per_n
      << " samples each";
    rep.add("mean purity follows 2/(N+2)", worst, 4.0, d.str());
  });

  rep.guarded("fit recovers noiseless parameters", 1e-5, [&] {
    std::vector<std::size_t> n;
    std::vector<double> y, w;
    for (std::size_t k = 1; k <= 20; ++k) {
      n.push_back(k);
      y.push_back(nong_law(static_cast<double>(k), 1.5, 0.3));
      w.push_back(1.0);
    }
    const FitResult fr = fit_nong(n, y, w);
    rep.add("fit recovers noiseless parameters",
            std::max(std::abs(fr.c1 - 1.5), std::abs(fr.c2 - 0.3)), 1e-5);
  });

  if (kernels::isa_available(kernels::Isa::Avx2)) {
    rep.guarded("SIMD kernels match scalar reference", 1e-12, [&] {
      std::vector<cplx> a(37), b(37);
      std::vector<double> w(37);
      for (std::size_t i = 0; i < a.size(); ++i) {
        a[i] = {rng.standard_normal(), rng.standard_normal()};
        b[i] = {rng.standard_normal(), rng.standard_normal()};
        w[i] = rng.uniform();
      }
      const auto &s = kernels::table(kernels::Isa::Scalar);
      const auto &v = kernels::table(kernels::Isa::Avx2);
      double dev = 0.0;
      for (std::size_t n = 0; n <= a.size(); ++n) {
        const double scale = 1.0 + s.abs2_sum(a.data(), n) + s.abs2_sum(b.data(), n);
        dev = std::max(dev, std::abs(s.cdotc(a.data(), b.data(), n) - v.cdotc(a.data(), b.data(), n)) / scale);
        dev = std::max(dev, std::abs(s.wcdotc(a.data(), b.data(), w.data(), n) -
                                     v.wcdotc(a.data(), b.data(), w.data(), n)) / scale);
        dev = std::max(dev, std::abs(s.abs2_sum(a.data(), n) - v.abs2_sum(a.data(), n)) / scale);
      }
      rep.add("SIMD kernels match scalar reference", dev, 1e-12, "relative to operand norms");
    });
  }

  return rep.take();
}

}  // namespace truncg
