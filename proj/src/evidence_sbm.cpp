// Copyright 2026 The Occam Graph Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "occam/evidence_sbm.hpp"

#include <Eigen/Cholesky>
#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

namespace occam {

bool SbmPrior::is_induced() const {
  return std::all_of(blocks.begin(), blocks.end(),
                     [](const BetaParams& b) { return b.alpha == 2.0 && b.beta == 1.0; });
}

SbmPrior induced_sbm_prior(int num_blocks) {
  if (num_blocks < 1) throw DomainError("induced_sbm_prior: K must be >= 1");
  return SbmPrior{std::vector<BetaParams>(static_cast<std::size_t>(num_blocks), BetaParams(2.0, 1.0))};
}

Eigen::VectorXd map_sbm_start(const BlockStats& stats) {
  const int K = stats.num_blocks();
  Eigen::VectorXd x(K);
  for (int k = 0; k < K; ++k) {
    const auto within = stats.S(k, k) + stats.O(k, k);
    x(k) = within > 0 ? std::clamp(std::sqrt(static_cast<double>(stats.S(k, k)) / within), 0.05, 0.95)
                      : 0.5;
  }
  return x;
}

namespace {

double resolution(double f) { return 64.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(f)); }

}  // namespace

LaplaceResult map_sbm(const BlockStats& stats, const SbmPrior& prior, const MapOptions& opts) {
  const int K = stats.num_blocks();
  detail::check_sbm_args(K, stats, prior);
  const double lo = opts.domain_eps;
  const double hi = 1.0 - opts.domain_eps;

  LaplaceResult r;
  Eigen::VectorXd x = map_sbm_start(stats);
  double f = log_p0(x, stats, prior);

  auto projected = [&](const Eigen::VectorXd& at, const Eigen::VectorXd& g) {
    Eigen::VectorXd pg = g;
    for (int k = 0; k < K; ++k) {
      if ((at(k) <= lo && g(k) < 0.0) || (at(k) >= hi && g(k) > 0.0)) pg(k) = 0.0;
    }
    return pg;
  };

  int it = 0;
  for (; it < opts.max_iter; ++it) {
    const Eigen::VectorXd g = grad_log_p0(x, stats, prior);
    const Eigen::VectorXd pg = projected(x, g);
    if (pg.lpNorm<Eigen::Infinity>() < opts.tol) {
      r.converged = true;
      break;
    }
    // Newton direction on the free coordinates when -H is positive definite
    // there, diagonal curvature scaling otherwise.
    const Eigen::MatrixXd H = hessian_log_p0(x, stats, prior);
    std::vector<int> free;
    for (int k = 0; k < K; ++k) {
      if (pg(k) != 0.0 || (x(k) > lo && x(k) < hi)) free.push_back(k);
    }
    const auto m = static_cast<Eigen::Index>(free.size());
    Eigen::MatrixXd negH(m, m);
    Eigen::VectorXd gf(m);
    for (Eigen::Index i = 0; i < m; ++i) {
      gf(i) = pg(free[static_cast<std::size_t>(i)]);
      for (Eigen::Index j = 0; j < m; ++j) negH(i, j) = -H(free[static_cast<std::size_t>(i)], free[static_cast<std::size_t>(j)]);
    }
    Eigen::VectorXd d = Eigen::VectorXd::Zero(K);
    Eigen::LLT<Eigen::MatrixXd> llt(negH);
    if (llt.info() == Eigen::Success) {
      const Eigen::VectorXd df = llt.solve(gf);
      for (Eigen::Index i = 0; i < m; ++i) d(free[static_cast<std::size_t>(i)]) = df(i);
    } else {
      for (int k = 0; k < K; ++k) d(k) = pg(k) / (-H(k, k) > 0.0 ? -H(k, k) : 1.0);
    }
    // Predicted gain below the resolution of f: nothing left to gain.
    if (0.5 * pg.dot(d) <= resolution(f)) {
      r.converged = true;
      break;
    }

    double t = opts.initial_step;
    bool accepted = false;
    Eigen::VectorXd x_new(K);
    while (t > 1e-20) {
      x_new = (x + t * d).cwiseMax(lo).cwiseMin(hi);
      const double f_new = log_p0(x_new, stats, prior);
      if (f_new >= f + opts.armijo * g.dot(x_new - x)) {
        accepted = true;
        f = f_new;
        break;
      }
      t *= opts.shrink;
    }
    if (!accepted || (x_new - x).lpNorm<Eigen::Infinity>() == 0.0) break;
    x = x_new;
  }
  r.iterations = it;
  r.x_star = x;
  r.log_p0_at_max = f;
  r.boundary_flag = ((x.array() <= lo) || (x.array() >= hi)).any();
  return r;
}

double log_det_spd(const Eigen::MatrixXd& J) {
  Eigen::LLT<Eigen::MatrixXd> llt(J);
  if (llt.info() != Eigen::Success) throw ApproximationError("J is not positive definite");
  const Eigen::VectorXd diag = llt.matrixL().toDenseMatrix().diagonal();
  if ((diag.array() <= 0.0).any()) throw ApproximationError("J is not positive definite");
  return 2.0 * diag.array().log().sum();
}

LaplaceResult laplace_log_evidence(const BlockStats& stats, const SbmPrior& prior,
                                   const MapOptions& opts) {
  LaplaceResult r = map_sbm(stats, prior, opts);
  if (r.boundary_flag) throw ApproximationError("laplace: MAP on the domain boundary");
  if (!r.converged) throw ApproximationError("laplace: gradient ascent did not converge");
  if (stats.min_exposure() < opts.min_exposure) {
    throw ApproximationError("laplace: a block pair has fewer than " +
                             std::to_string(opts.min_exposure) + " vertex pairs");
  }
  const Eigen::MatrixXd J = -hessian_log_p0(r.x_star, stats, prior);
  r.log_det_J = log_det_spd(J);
  const int K = stats.num_blocks();
  r.log_evidence = r.log_p0_at_max + 0.5 * K * kLog2Pi - 0.5 * r.log_det_J;
  return r;
}

namespace {

// log p0 in u = x^2 coordinates including the Jacobian prod 1 / (2 sqrt(u)).
class UKernel {
 public:
  UKernel(const BlockStats& stats, const SbmPrior& prior) : K_(stats.num_blocks()) {
    for (int k = 0; k < K_; ++k) {
      const BetaParams& b = prior.blocks[static_cast<std::size_t>(k)];
      // x^(e) with x = sqrt(u), times 1/(2 sqrt(u)): u^((e - 1) / 2) / 2.
      half_exp_[k] = 0.5 * (static_cast<double>(stats.degree_exponent(k)) + b.alpha - 2.0);
      beta_m1_[k] = b.beta - 1.0;
      constant_ -= log_beta(b.alpha, b.beta) + std::log(2.0);
      for (int l = 0; l < K_; ++l) O_[k][l] = static_cast<double>(stats.O(k, l));
    }
  }

  double operator()(const std::array<double, 3>& u) const {
    double acc = constant_;
    std::array<double, 3> x{};
    for (int k = 0; k < K_; ++k) {
      if (!(u[k] > 0.0 && u[k] < 1.0)) return kNegInf;
      x[k] = std::sqrt(u[k]);
    }
    for (int k = 0; k < K_; ++k) {
      if (half_exp_[k] != 0.0) acc += half_exp_[k] * std::log(u[k]);
      if (O_[k][k] != 0.0) acc += O_[k][k] * std::log1p(-u[k]);
      if (beta_m1_[k] != 0.0) acc += beta_m1_[k] * std::log1p(-x[k]);
      for (int l = k + 1; l < K_; ++l) {
        if (O_[k][l] != 0.0) acc += O_[k][l] * std::log1p(-x[k] * x[l]);
      }
    }
    return acc;
  }

 private:
  int K_;
  double constant_ = 0.0;
  std::array<double, 3> half_exp_{};
  std::array<double, 3> beta_m1_{};
  std::array<std::array<double, 3>, 3> O_{};
};

}  // namespace

double quadrature_log_evidence(const BlockStats& stats, const SbmPrior& prior,
                               const QuadratureOptions& opts) {
  const int K = stats.num_blocks();
  detail::check_sbm_args(K, stats, prior);
  if (K > 3) throw UnsupportedError("quadrature_log_evidence: K > 3 is not supported");
  const UKernel kernel(stats, prior);
  std::array<double, 3> u{};
  std::function<double(int)> integrate_from = [&](int k) -> double {
    return log_integrate(
        [&, k](double t) {
          u[static_cast<std::size_t>(k)] = t;
          return k + 1 == K ? kernel(u) : integrate_from(k + 1);
        },
        0.0, 1.0, opts);
  };
  return integrate_from(0);
}

double complete_graph_log_evidence(const BlockStats& stats, const SbmPrior& prior) {
  const int K = stats.num_blocks();
  detail::check_sbm_args(K, stats, prior);
  if (!stats.has_no_absent_pairs()) {
    throw DomainError("complete_graph_log_evidence: stats have absent pairs");
  }
  if (!prior.is_induced()) throw DomainError("complete_graph_log_evidence: needs Beta(2, 1) priors");
  double acc = K * std::log(2.0);
  for (int k = 0; k < K; ++k) acc -= std::log(static_cast<double>(stats.degree_exponent(k)) + 2.0);
  return acc;
}

}  // namespace occam
