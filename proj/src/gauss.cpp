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

#include "truncg/gauss.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include <unsupported/Eigen/MatrixFunctions>

#include "truncg/error.hpp"
#include "truncg/kernels.hpp"

namespace truncg {

GaussianFockParams gauss_params(const PhaseSpaceMoments &m) {
  GaussianFockParams p;
  p.A = 0.5 * (m.s11 + m.s22 - 1.0);
  p.B = cplx(0.5 * (m.s22 - m.s11), -m.s12);
  p.C = cplx(m.x1, m.x2) * (1.0 / std::numbers::sqrt2);

  // (1+A)^2 - |B|^2 = det sigma + (s11 + s22)/2 + 1/4 and
  // A(1+A) - |B|^2 = det sigma - 1/4; the determinant forms avoid cancellation.
  const double det = m.det();
  p.denom = det + 0.5 * (m.s11 + m.s22) + 0.25;
  if (!(p.denom > 0.0)) {
    throw Error(ErrorKind::InvalidState, "non-positive Gaussian normalization denominator");
  }
  p.A_t = std::max(0.0, det - 0.25) / p.denom;
  p.B_t = p.B / p.denom;
  p.C_t = ((1.0 + p.A) * p.C + p.B * std::conj(p.C)) / p.denom;
  const double expo =
      ((1.0 + p.A) * std::norm(p.C) + (p.B * std::conj(p.C) * std::conj(p.C)).real()) / p.denom;
  p.K = std::exp(-expo) / std::sqrt(p.denom);
  return p;
}

cplx hermite(unsigned n, cplx z) {
  cplx prev(1.0, 0.0);
  if (n == 0) return prev;
  cplx cur = 2.0 * z;
  for (unsigned k = 1; k < n; ++k) {
    const cplx next = 2.0 * z * cur - 2.0 * static_cast<double>(k) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

cplx scaled_hermite(unsigned n, cplx b_t, cplx c_t) {
  cplx prev(1.0, 0.0);
  if (n == 0) return prev;
  cplx cur = c_t;
  for (unsigned k = 1; k < n; ++k) {
    const cplx next = c_t * cur - static_cast<double>(k) * b_t * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

namespace {

// Row l of the factor P with tau = K P P^dag:
//   P[l][k] = sqrt(C(l,k)) At^{k/2} G_{l-k} / sqrt((l-k)!),   k = 0..l.
// G_j / sqrt(j!) follows g_{j+1} = (Ct g_j - sqrt(j) Bt g_{j-1}) / sqrt(j+1),
// which stays bounded where G_j and j! overflow.
class FockFactor {
 public:
  explicit FockFactor(const GaussianFockParams &p)
      : b_t_(p.B_t), c_t_(p.C_t), sqrt_a_t_(std::sqrt(p.A_t)), k_(p.K) {}

  const std::vector<cplx> &row(std::size_t l) const { return rows_[l]; }
  std::size_t size() const { return rows_.size(); }

  // Appends the next row and returns its diagonal element <l|tau|l>.
  double push_row() {
    const std::size_t l = rows_.size();
    if (l == 0) {
      g_.push_back(1.0);
    } else if (l == 1) {
      g_.push_back(c_t_);
    } else {
      const double j = static_cast<double>(l - 1);
      g_.push_back((c_t_ * g_[l - 1] - std::sqrt(j) * b_t_ * g_[l - 2]) / std::sqrt(j + 1.0));
    }
    std::vector<cplx> row(l + 1);
    // coefficient sqrt(C(l,k)) At^{k/2} by multiplicative recurrence in k
    double coef = 1.0;
    for (std::size_t k = 0; k <= l; ++k) {
      if (k > 0) {
        coef *= sqrt_a_t_ * std::sqrt(static_cast<double>(l - k + 1) / static_cast<double>(k));
      }
      row[k] = coef * g_[l - k];
      if (coef == 0.0) break;
    }
    rows_.push_back(std::move(row));
    return k_ * kernels::abs2_sum(rows_.back());
  }

  Eigen::MatrixXcd gram() const {
    const auto d = static_cast<Eigen::Index>(rows_.size());
    Eigen::MatrixXcd tau(d, d);
    for (Eigen::Index m = 0; m < d; ++m) {
      const auto &pm = rows_[static_cast<std::size_t>(m)];
      tau(m, m) = k_ * kernels::abs2_sum(pm);
      for (Eigen::Index l = m + 1; l < d; ++l) {
        const auto &pl = rows_[static_cast<std::size_t>(l)];
        const cplx v = k_ * kernels::cdotc(std::span<const cplx>(pl.data(), pm.size()), pm);
        tau(l, m) = v;
        tau(m, l) = std::conj(v);
      }
    }
    return tau;
  }

 private:
  cplx b_t_;
  cplx c_t_;
  double sqrt_a_t_;
  double k_;
  std::vector<cplx> g_;
  std::vector<std::vector<cplx>> rows_;
};

}  // namespace

GaussianReference gaussian_fock_matrix(const GaussianFockParams &p, const FockMatrixOptions &opts) {
  if (opts.max_dim == 0) throw Error(ErrorKind::InvalidArgument, "max_dim must be positive");
  FockFactor factor(p);
  double trace = 0.0;
  while (true) {
    trace += factor.push_row();
    if (1.0 - trace <= opts.trace_tol) break;
    if (factor.size() >= opts.max_dim) {
      throw Error(ErrorKind::Convergence,
                  "Gaussian reference trace deficit " + std::to_string(1.0 - trace) +
                      " above tolerance at dimension " + std::to_string(opts.max_dim));
    }
  }
  GaussianReference ref;
  ref.entries = factor.gram();
  ref.trace_deficit = std::abs(1.0 - ref.entries.trace().real());
  return ref;
}

GaussianReference gaussian_fock_matrix_fixed(const GaussianFockParams &p, std::size_t dim) {
  if (dim == 0) throw Error(ErrorKind::InvalidDimension, "dimension must be positive");
  FockFactor factor(p);
  for (std::size_t l = 0; l < dim; ++l) factor.push_row();
  GaussianReference ref;
  ref.entries = factor.gram();
  ref.trace_deficit = std::abs(1.0 - ref.entries.trace().real());
  return ref;
}

GaussianDecomposition gaussian_decomposition(const PhaseSpaceMoments &m) {
  const double det = m.det();
  if (det < 0.25 - kPhysicalityTol) {
    throw Error(ErrorKind::InvalidState, "covariance violates the uncertainty relation");
  }
  GaussianDecomposition gd;
  const double s = std::sqrt(std::max(det, 0.25));
  gd.n_t = s - 0.5;
  const double half_gap = 0.5 * std::hypot(m.s11 - m.s22, 2.0 * m.s12);
  const double lambda_max = (0.5 * (m.s11 + m.s22) + half_gap) / s;
  gd.r = 0.5 * std::log(std::max(lambda_max, 1.0));
  gd.theta = half_gap > 0.0 ? 0.5 * std::atan2(2.0 * m.s12, m.s11 - m.s22) : 0.0;
  gd.alpha = cplx(m.x1, m.x2) * (1.0 / std::numbers::sqrt2);
  return gd;
}

PhaseSpaceMoments gaussian_moments(const GaussianDecomposition &gd) {
  const double s = gd.n_t + 0.5;
  const double ch = std::cosh(2.0 * gd.r);
  const double sh = std::sinh(2.0 * gd.r);
  PhaseSpaceMoments m;
  m.x1 = std::numbers::sqrt2 * gd.alpha.real();
  m.x2 = std::numbers::sqrt2 * gd.alpha.imag();
  m.s11 = s * (ch + sh * std::cos(2.0 * gd.theta));
  m.s22 = s * (ch - sh * std::cos(2.0 * gd.theta));
  m.s12 = s * sh * std::sin(2.0 * gd.theta);
  return m;
}

GaussianReference gaussian_oracle(const GaussianDecomposition &gd, std::size_t d_big,
                                  std::size_t crop_dim) {
  if (d_big < 2) throw Error(ErrorKind::InvalidDimension, "oracle dimension must be at least 2");
  if (crop_dim == 0) crop_dim = std::max<std::size_t>(1, d_big / 4);
  if (crop_dim > d_big) throw Error(ErrorKind::InvalidDimension, "crop larger than oracle space");
  const auto n = static_cast<Eigen::Index>(d_big);

  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index k = 1; k < n; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
  const Eigen::MatrixXcd ad = a.adjoint();

  const cplx alpha = gd.alpha;
  const cplx zeta = std::polar(gd.r, 2.0 * gd.theta);
  const Eigen::MatrixXcd disp_gen = alpha * ad - std::conj(alpha) * a;
  const Eigen::MatrixXcd sq_gen = 0.5 * zeta * (ad * ad) - 0.5 * std::conj(zeta) * (a * a);
  const Eigen::MatrixXcd disp = disp_gen.exp();
  const Eigen::MatrixXcd sq = sq_gen.exp();

  Eigen::VectorXcd thermal(n);
  const double ratio = gd.n_t / (1.0 + gd.n_t);
  double w = 1.0 / (1.0 + gd.n_t);
  for (Eigen::Index k = 0; k < n; ++k) {
    thermal(k) = w;
    w *= ratio;
  }

  const Eigen::MatrixXcd u = disp * sq;
  const Eigen::MatrixXcd full = u * thermal.asDiagonal() * u.adjoint();
  if (!full.allFinite()) throw Error(ErrorKind::Numerical, "matrix exponential did not converge");

  const auto c = static_cast<Eigen::Index>(crop_dim);
  GaussianReference ref;
  ref.entries = full.topLeftCorner(c, c);
  ref.trace_deficit = std::abs(1.0 - ref.entries.trace().real());
  return ref;
}

}  // namespace truncg
