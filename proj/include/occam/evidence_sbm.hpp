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

#ifndef OCCAM_EVIDENCE_SBM_HPP_
#define OCCAM_EVIDENCE_SBM_HPP_

#include <cmath>
#include <limits>
#include <vector>

#include <Eigen/Core>

#include "occam/beta.hpp"
#include "occam/errors.hpp"
#include "occam/graph.hpp"
#include "occam/quadrature.hpp"
#include "occam/special.hpp"

namespace occam {

// Independent Beta(alpha_k, beta_k) priors on the rank-1 latent positions.
struct SbmPrior {
  std::vector<BetaParams> blocks;
  int num_blocks() const { return static_cast<int>(blocks.size()); }
  bool is_induced() const;  // every block Beta(2, 1)
};

// Prior on (x_1..x_K) induced by a uniform ER prior: Beta(2, 1) per block.
SbmPrior induced_sbm_prior(int num_blocks);

namespace detail {
inline void check_sbm_args(Eigen::Index dim, const BlockStats& stats, const SbmPrior& prior) {
  if (dim != stats.num_blocks() || prior.num_blocks() != stats.num_blocks()) {
    throw DomainError("sbm: x, stats and prior must all have K entries");
  }
}
}  // namespace detail

// Log posterior kernel p0 = f(A | x) prod Beta(x_k; alpha_k, beta_k) of the
// rank-1 K-block SBM with edge probability x_k x_l between blocks k and l.
// Returns -inf outside the open unit cube.
template <typename Derived>
typename Derived::Scalar log_p0(const Eigen::MatrixBase<Derived>& x, const BlockStats& stats,
                                const SbmPrior& prior) {
  using Scalar = typename Derived::Scalar;
  using std::log;
  using std::log1p;
  detail::check_sbm_args(x.size(), stats, prior);
  const int K = stats.num_blocks();
  for (int k = 0; k < K; ++k) {
    if (!(x(k) > Scalar(0) && x(k) < Scalar(1))) {
      return Scalar(-std::numeric_limits<double>::infinity());
    }
  }
  Scalar acc(0);
  for (int k = 0; k < K; ++k) {
    const BetaParams& b = prior.blocks[static_cast<std::size_t>(k)];
    const double e = static_cast<double>(stats.degree_exponent(k)) + b.alpha - 1.0;
    acc += e * log(x(k));
    if (stats.O(k, k) != 0) acc += static_cast<double>(stats.O(k, k)) * log1p(-x(k) * x(k));
    if (b.beta != 1.0) acc += (b.beta - 1.0) * log1p(-x(k));
    acc -= log_beta(b.alpha, b.beta);
    for (int l = k + 1; l < K; ++l) {
      if (stats.O(k, l) != 0) acc += static_cast<double>(stats.O(k, l)) * log1p(-x(k) * x(l));
    }
  }
  return acc;
}

// Gradient of log_p0. Throws NumericError outside the open unit cube.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> grad_log_p0(
    const Eigen::MatrixBase<Derived>& x, const BlockStats& stats, const SbmPrior& prior) {
  using Scalar = typename Derived::Scalar;
  detail::check_sbm_args(x.size(), stats, prior);
  const int K = stats.num_blocks();
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> g(K);
  for (int k = 0; k < K; ++k) {
    if (!(x(k) > Scalar(0) && x(k) < Scalar(1))) throw NumericError("grad_log_p0: x on boundary");
  }
  for (int k = 0; k < K; ++k) {
    const BetaParams& b = prior.blocks[static_cast<std::size_t>(k)];
    const double e = static_cast<double>(stats.degree_exponent(k)) + b.alpha - 1.0;
    const Scalar xk = x(k);
    Scalar gk = e / xk - (b.beta - 1.0) / (Scalar(1) - xk) -
                2.0 * static_cast<double>(stats.O(k, k)) * xk / (Scalar(1) - xk * xk);
    for (int l = 0; l < K; ++l) {
      if (l != k) gk -= x(l) * static_cast<double>(stats.O(k, l)) / (Scalar(1) - xk * x(l));
    }
    g(k) = gk;
  }
  return g;
}

// Hessian of log_p0 (symmetric). J = -hessian_log_p0 at the MAP.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> hessian_log_p0(
    const Eigen::MatrixBase<Derived>& x, const BlockStats& stats, const SbmPrior& prior) {
  using Scalar = typename Derived::Scalar;
  detail::check_sbm_args(x.size(), stats, prior);
  const int K = stats.num_blocks();
  for (int k = 0; k < K; ++k) {
    if (!(x(k) > Scalar(0) && x(k) < Scalar(1))) {
      throw NumericError("hessian_log_p0: x on boundary");
    }
  }
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> H(K, K);
  for (int k = 0; k < K; ++k) {
    const BetaParams& b = prior.blocks[static_cast<std::size_t>(k)];
    const double e = static_cast<double>(stats.degree_exponent(k)) + b.alpha - 1.0;
    const Scalar xk = x(k);
    const Scalar one_m = Scalar(1) - xk;
    const Scalar one_m_sq = Scalar(1) - xk * xk;
    Scalar hkk = -e / (xk * xk) - (b.beta - 1.0) / (one_m * one_m) -
                 2.0 * static_cast<double>(stats.O(k, k)) * (Scalar(1) + xk * xk) /
                     (one_m_sq * one_m_sq);
    for (int l = 0; l < K; ++l) {
      if (l == k) continue;
      const Scalar d = Scalar(1) - xk * x(l);
      hkk -= x(l) * x(l) * static_cast<double>(stats.O(k, l)) / (d * d);
      H(k, l) = -static_cast<double>(stats.O(k, l)) / (d * d);
    }
    H(k, k) = hkk;
  }
  return H;
}

struct MapOptions {
  int max_iter = 10000;
  double tol = 1e-9;             // sup-norm of the projected gradient
  double domain_eps = 1e-8;      // iterates stay in [eps, 1 - eps]
  double armijo = 1e-4;
  double shrink = 0.5;
  double initial_step = 1.0;
  std::int64_t min_exposure = 5;  // Laplace validity gate on S + O per block pair
};

struct LaplaceResult {
  Eigen::VectorXd x_star;
  double log_p0_at_max = kNegInf;
  double log_det_J = 0.0;
  double log_evidence = kNegInf;
  bool converged = false;
  int iterations = 0;
  bool boundary_flag = false;
};

// Starting point of the ascent: sqrt of the within-block edge density,
// clamped to [0.05, 0.95] (0.5 when a block has no within pairs).
Eigen::VectorXd map_sbm_start(const BlockStats& stats);

// MAP of p0 by projected ascent with Armijo backtracking: Newton steps on the
// coordinates not pinned at a bound when -H is positive definite there,
// diagonally scaled gradient steps otherwise. Converged once the projected
// gradient is below tol or the predicted gain is below the rounding of p0.
// Fills x_star, log_p0_at_max, converged, iterations and boundary_flag.
LaplaceResult map_sbm(const BlockStats& stats, const SbmPrior& prior, const MapOptions& opts = {});

// Laplace approximation log p0(x*) + (K/2) log 2 pi - (1/2) log det J.
// Throws ApproximationError unless the MAP is interior and converged, J is
// positive definite and every block pair has at least opts.min_exposure
// vertex pairs.
LaplaceResult laplace_log_evidence(const BlockStats& stats, const SbmPrior& prior,
                                   const MapOptions& opts = {});

// log det of a symmetric positive definite matrix; throws ApproximationError
// if the Cholesky factorization fails.
double log_det_spd(const Eigen::MatrixXd& J);

// Evidence by nested adaptive quadrature over u_k = x_k^2, K <= 3.
double quadrature_log_evidence(const BlockStats& stats, const SbmPrior& prior,
                               const QuadratureOptions& opts = {});

// Closed form for graphs with no absent pairs under Beta(2, 1) priors:
// K log 2 - sum_k log(2 S_kk + sum_{l != k} S_kl + 2).
double complete_graph_log_evidence(const BlockStats& stats, const SbmPrior& prior);

}  // namespace occam

#endif  // OCCAM_EVIDENCE_SBM_HPP_
