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

#include "truncg/fit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "truncg/error.hpp"

namespace truncg {

double purity_law(double n_max) {
  if (n_max < 1.0) throw Error(ErrorKind::InvalidArgument, "purity law needs N >= 1");
  return 2.0 / (n_max + 2.0);
}

double nong_law(double n_max, double c1, double c2) { return c2 - std::pow(n_max + 2.0, -c1); }

namespace {

struct Objective {
  std::span<const std::size_t> n;
  std::span<const double> y;
  std::span<const double> w;

  double best_c2(double c1) const {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < n.size(); ++i) {
      num += w[i] * (y[i] + std::pow(static_cast<double>(n[i]) + 2.0, -c1));
      den += w[i];
    }
    return num / den;
  }

  double operator()(double c1) const {
    const double c2 = best_c2(c1);
    double s = 0.0;
    for (std::size_t i = 0; i < n.size(); ++i) {
      const double r = y[i] - nong_law(static_cast<double>(n[i]), c1, c2);
      s += w[i] * r * r;
    }
    return s;
  }
};

}  // namespace

FitResult fit_nong(std::span<const std::size_t> n_values, std::span<const double> mean_nong,
                   std::span<const double> weights, const FitOptions &opts) {
  if (n_values.size() < 3) throw Error(ErrorKind::InsufficientData, "fit needs at least 3 rows");
  if (mean_nong.size() != n_values.size() || weights.size() != n_values.size()) {
    throw Error(ErrorKind::InvalidArgument, "fit inputs differ in length");
  }
  if (!(opts.c1_hi > opts.c1_lo) || opts.grid_points < 3) {
    throw Error(ErrorKind::InvalidArgument, "bad fit search interval");
  }
  const Objective f{n_values, mean_nong, weights};

  // Grid scan: locate the basin and check the objective is unimodal.
  const std::size_t g = opts.grid_points;
  const double step = (opts.c1_hi - opts.c1_lo) / static_cast<double>(g - 1);
  std::vector<double> vals(g);
  for (std::size_t i = 0; i < g; ++i) vals[i] = f(opts.c1_lo + static_cast<double>(i) * step);
  const auto best = static_cast<std::size_t>(std::min_element(vals.begin(), vals.end()) - vals.begin());
  FitResult fr;
  for (std::size_t i = 1; i < g; ++i) {
    if ((i <= best && vals[i] > vals[i - 1]) || (i > best && vals[i] < vals[i - 1])) {
      fr.grid_unimodal = false;
    }
  }

  double a = opts.c1_lo + static_cast<double>(best == 0 ? 0 : best - 1) * step;
  double b = opts.c1_lo + static_cast<double>(std::min(best + 1, g - 1)) * step;
  const double inv_phi = 1.0 / std::numbers::phi;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > opts.tol) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    }
  }
  fr.c1 = 0.5 * (a + b);
  fr.c2 = f.best_c2(fr.c1);
  fr.n_values.assign(n_values.begin(), n_values.end());
  fr.rss = 0.0;
  for (std::size_t i = 0; i < n_values.size(); ++i) {
    const double r = mean_nong[i] - nong_law(static_cast<double>(n_values[i]), fr.c1, fr.c2);
    fr.per_point_residuals.push_back(r);
    fr.rss += r * r;
  }
  return fr;
}

FitResult fit_nong(std::span<const SummaryRow> rows, const FitOptions &opts) {
  if (rows.size() < 3) throw Error(ErrorKind::InsufficientData, "fit needs at least 3 rows");
  std::vector<std::size_t> n;
  std::vector<double> y, w;
  for (const auto &r : rows) {
    n.push_back(r.n_max);
    y.push_back(r.non_gaussianity.mean);
    if (opts.weighted) {
      const double sd = r.non_gaussianity.std;
      if (!(sd > 0.0)) throw Error(ErrorKind::InvalidArgument, "weighted fit needs positive stds");
      w.push_back(1.0 / (sd * sd));
    } else {
      w.push_back(1.0);
    }
  }
  return fit_nong(n, y, w, opts);
}

double delta_of_mu(double mu, double c1, double c2) {
  if (!(mu >= 0.0 && mu <= 1.0)) throw Error(ErrorKind::InvalidArgument, "purity outside [0, 1]");
  return c2 - std::pow(0.5 * mu, c1);
}

double delta_of_mu(double mu, const FitResult &fr) { return delta_of_mu(mu, fr.c1, fr.c2); }

std::vector<PurityResidual> purity_residuals(std::span<const SummaryRow> rows) {
  std::vector<PurityResidual> out;
  out.reserve(rows.size());
  for (const auto &r : rows) {
    PurityResidual pr;
    pr.n_max = r.n_max;
    pr.residual = r.purity_rho.mean - purity_law(static_cast<double>(r.n_max));
    pr.std_error = r.purity_rho.std / std::sqrt(static_cast<double>(r.count));
    out.push_back(pr);
  }
  return out;
}

}  // namespace truncg
