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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <numeric>

#include <Eigen/Eigenvalues>

#include "occam/errors.hpp"
#include "occam/evidence_er_ie.hpp"
#include "occam/random.hpp"

namespace occam {
namespace {

using Eigen::VectorXd;

BlockStats single_block_stats(std::int64_t n, std::int64_t s) {
  CountMatrix S(1, 1), O(1, 1);
  S << s;
  O << n - s;
  return make_block_stats(S, O, {1}, true);
}

// Random block statistics with K blocks and pair counts up to `scale`.
BlockStats random_stats(Rng& rng, int K, double scale) {
  CountMatrix S(K, K), O(K, K);
  for (int k = 0; k < K; ++k) {
    for (int l = k; l < K; ++l) {
      const auto total = static_cast<std::int64_t>(1 + rng.uniform() * scale);
      const auto s = static_cast<std::int64_t>(rng.uniform() * (total + 1));
      S(k, l) = S(l, k) = s;
      O(k, l) = O(l, k) = total - s;
    }
  }
  return make_block_stats(S, O, std::vector<std::int64_t>(static_cast<std::size_t>(K), 1), true);
}

SbmPrior random_prior(Rng& rng, int K) {
  SbmPrior p;
  for (int k = 0; k < K; ++k) p.blocks.emplace_back(0.5 + 3 * rng.uniform(), 0.5 + 3 * rng.uniform());
  return p;
}

BlockStats stats_of_partition(const Graph& g, std::vector<int> labels, int K) {
  return block_stats(g, BlockAssignment(std::move(labels), K));
}

TEST(InducedPrior, BetaTwoOne) {
  for (int K : {1, 4}) {
    const SbmPrior p = induced_sbm_prior(K);
    ASSERT_EQ(p.num_blocks(), K);
    for (const BetaParams& b : p.blocks) EXPECT_EQ(b, BetaParams(2, 1));
    EXPECT_TRUE(p.is_induced());
  }
  EXPECT_THROW(induced_sbm_prior(0), DomainError);
}

TEST(LogP0, HandEvaluation) {
  const BlockStats st = single_block_stats(3, 2);
  const double v = log_p0(VectorXd::Constant(1, 0.5), st, induced_sbm_prior(1));
  EXPECT_NEAR(v, 5 * std::log(0.5) + std::log(0.75) + std::log(2.0), 1e-14);
}

TEST(LogP0, BoundaryIsMinusInfinity) {
  const BlockStats st = single_block_stats(3, 2);
  const SbmPrior p = induced_sbm_prior(1);
  EXPECT_EQ(log_p0(VectorXd::Constant(1, 1.0), st, p), kNegInf);
  EXPECT_EQ(log_p0(VectorXd::Constant(1, 0.0), st, p), kNegInf);
  EXPECT_LT(log_p0(VectorXd::Constant(1, 1 - 1e-12), st, p), -20);
  EXPECT_THROW(grad_log_p0(VectorXd::Constant(1, 1.0), st, p), NumericError);
  EXPECT_THROW(hessian_log_p0(VectorXd::Constant(1, 0.0), st, p), NumericError);
}

TEST(GradLogP0, PurePrior) {
  const BlockStats st = single_block_stats(0, 0);
  for (double x : {0.1, 0.5, 0.9}) {
    EXPECT_NEAR(grad_log_p0(VectorXd::Constant(1, x), st, induced_sbm_prior(1))(0), 1 / x, 1e-14);
  }
}

TEST(Derivatives, MatchFiniteDifferences) {
  Rng rng(2024);
  for (int inst = 0; inst < 100; ++inst) {
    const int K = 1 + inst % 4;
    const BlockStats st = random_stats(rng, K, 60);
    const SbmPrior prior = random_prior(rng, K);
    VectorXd x(K);
    for (int k = 0; k < K; ++k) x(k) = 0.05 + 0.9 * rng.uniform();
    const VectorXd g = grad_log_p0(x, st, prior);
    const Eigen::MatrixXd H = hessian_log_p0(x, st, prior);
    const double h = 1e-6;
    for (int k = 0; k < K; ++k) {
      VectorXd xp = x, xm = x;
      xp(k) += h;
      xm(k) -= h;
      const double fd = (log_p0(xp, st, prior) - log_p0(xm, st, prior)) / (2 * h);
      EXPECT_NEAR(fd, g(k), 1e-5 * std::max(1.0, std::abs(g(k))));
      const VectorXd gd = (grad_log_p0(xp, st, prior) - grad_log_p0(xm, st, prior)) / (2 * h);
      for (int l = 0; l < K; ++l) {
        EXPECT_NEAR(gd(l), H(l, k), 1e-4 * std::max(1.0, std::abs(H(l, k))));
      }
    }
    EXPECT_EQ(H, H.transpose());
  }
}

TEST(Derivatives, OffDiagonalZeroWithoutAbsentPairs) {
  CountMatrix S(2, 2), O(2, 2);
  S << 3, 4, 4, 1;
  O << 2, 0, 0, 5;
  const BlockStats st = make_block_stats(S, O, {2, 2}, true);
  const Eigen::MatrixXd H = hessian_log_p0(Eigen::Vector2d(0.3, 0.6), st, induced_sbm_prior(2));
  EXPECT_EQ(H(0, 1), 0.0);
  EXPECT_EQ(H(1, 0), 0.0);
}

TEST(MapSbm, SingleBlockClosedForm) {
  // p0(x) = 2 x^5 (1 - x^2); the stationarity condition 5 (1 - x^2) = 2 x^2
  // gives x* = sqrt(5/7).
  const BlockStats st = single_block_stats(3, 2);
  const SbmPrior p = induced_sbm_prior(1);
  const LaplaceResult r = map_sbm(st, p);
  EXPECT_TRUE(r.converged);
  EXPECT_FALSE(r.boundary_flag);
  EXPECT_NEAR(r.x_star(0), std::sqrt(5.0 / 7.0), 1e-9);
  // Brute-force grid check.
  double best_x = 0, best = kNegInf;
  for (int i = 1; i < 100000; ++i) {
    const double x = i / 100000.0;
    const double v = log_p0(VectorXd::Constant(1, x), st, p);
    if (v > best) best = v, best_x = x;
  }
  EXPECT_NEAR(r.x_star(0), best_x, 1e-5);
  EXPECT_NEAR(grad_log_p0(r.x_star, st, p)(0), 0.0, 1e-8);
}

TEST(MapSbm, StationaryAgainstBisectionRoot) {
  // The 1-D gradient is decreasing; bisection finds its root independently.
  for (auto [n, s] : {std::pair<std::int64_t, std::int64_t>{50, 13}, {500, 400}, {5000, 1}}) {
    const BlockStats st = single_block_stats(n, s);
    const SbmPrior p = induced_sbm_prior(1);
    double lo = 1e-9, hi = 1 - 1e-9;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      (grad_log_p0(VectorXd::Constant(1, mid), st, p)(0) > 0 ? lo : hi) = mid;
    }
    const LaplaceResult r = map_sbm(st, p);
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(r.x_star(0), 0.5 * (lo + hi), 1e-8);
  }
}

TEST(MapSbm, CompleteGraphHitsBoundary) {
  const Graph g = Graph::complete(6, true);
  const BlockStats st = stats_of_partition(g, {0, 0, 0, 1, 1, 1}, 2);
  const LaplaceResult r = map_sbm(st, induced_sbm_prior(2));
  EXPECT_TRUE(r.boundary_flag);
  EXPECT_THROW(laplace_log_evidence(st, induced_sbm_prior(2)), ApproximationError);
}

TEST(MapSbm, LabelPermutationEquivariance) {
  const BlockAssignment z({0, 0, 0, 1, 1, 1, 1, 2, 2, 2, 2, 2}, 3);
  const Graph g = sample_sbm_rank1(Eigen::Vector3d(0.3, 0.6, 0.9), z, true, 4);
  std::vector<int> swapped;
  const int perm[3] = {2, 0, 1};
  for (int l : z.labels()) swapped.push_back(perm[l]);
  const BlockStats a = block_stats(g, z);
  const BlockStats b = block_stats(g, BlockAssignment(swapped, 3));
  const SbmPrior p = induced_sbm_prior(3);
  const LaplaceResult ra = map_sbm(a, p), rb = map_sbm(b, p);
  for (int k = 0; k < 3; ++k) EXPECT_NEAR(ra.x_star(k), rb.x_star(perm[k]), 1e-8);
  EXPECT_NEAR(ra.log_p0_at_max, rb.log_p0_at_max, 1e-9);
}

TEST(Laplace, InvariantHolds) {
  const BlockAssignment z = BlockAssignment::contiguous(40, 2);
  const BlockStats st = block_stats(sample_sbm_rank1(Eigen::Vector2d(0.3, 0.8), z, true, 10), z);
  const SbmPrior p = induced_sbm_prior(2);
  const LaplaceResult r = laplace_log_evidence(st, p);
  const Eigen::MatrixXd J = -hessian_log_p0(r.x_star, st, p);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  EXPECT_GT(es.eigenvalues().minCoeff(), 0.0);
  EXPECT_NEAR(r.log_det_J, std::log(J.determinant()), 1e-10);
  EXPECT_NEAR(r.log_evidence, r.log_p0_at_max + kLog2Pi - 0.5 * r.log_det_J, 1e-12);
}

TEST(Laplace, AgreesWithQuadratureTwoBlocks) {
  const BlockAssignment z = BlockAssignment::contiguous(40, 2);
  const SbmPrior p = induced_sbm_prior(2);
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const BlockStats st = block_stats(sample_sbm_rank1(Eigen::Vector2d(0.3, 0.8), z, true, seed), z);
    EXPECT_NEAR(laplace_log_evidence(st, p).log_evidence, quadrature_log_evidence(st, p), 0.1);
  }
}

TEST(Laplace, SingleBlockErrorShrinks) {
  double prev = 1e300;
  for (std::int64_t n : {50, 500, 5000}) {
    const std::int64_t s = (3 * n) / 10;
    const double exact = log_beta(s + 1.0, n - s + 1.0);
    const double err = std::abs(laplace_log_evidence(single_block_stats(n, s), induced_sbm_prior(1)).log_evidence - exact);
    EXPECT_LT(err, prev);
    prev = err;
  }
  EXPECT_LT(prev, 1e-3);
}

TEST(Laplace, GateRejectsSmallExposureAndIndefiniteJ) {
  EXPECT_THROW(laplace_log_evidence(single_block_stats(3, 2), induced_sbm_prior(1)), ApproximationError);
  Eigen::Matrix2d J;
  J << 1, 2, 2, 1;
  EXPECT_THROW(log_det_spd(J), ApproximationError);
  EXPECT_NEAR(log_det_spd(Eigen::Matrix2d::Identity() * 3), 2 * std::log(3.0), 1e-15);
}

TEST(Quadrature, SingleBlockEqualsUniformEr) {
  EXPECT_NEAR(quadrature_log_evidence(single_block_stats(3, 2), induced_sbm_prior(1)), std::log(1.0 / 12), 1e-12);
  for (std::int64_t n = 1; n <= 100; n += 3) {
    for (std::int64_t s = 0; s <= n; s += 1 + n / 7) {
      EXPECT_NEAR(quadrature_log_evidence(single_block_stats(n, s), induced_sbm_prior(1)),
                  log_evidence_er({n, s}, uniform_er_prior()), 1e-8);
    }
  }
}

TEST(Quadrature, CompleteGraphClosedForm) {
  const Graph g = Graph::complete(5, true);
  const BlockStats st = stats_of_partition(g, {0, 1, 0, 0, 1}, 2);
  EXPECT_NEAR(quadrature_log_evidence(st, induced_sbm_prior(2)),
              complete_graph_log_evidence(st, induced_sbm_prior(2)), 1e-8);
}

TEST(Quadrature, BlockSwapInvariance) {
  const BlockAssignment z({0, 0, 0, 1, 1, 1, 1}, 2);
  const Graph g = sample_sbm_rank1(Eigen::Vector2d(0.4, 0.7), z, false, 3);
  const BlockStats a = block_stats(g, z);
  const BlockStats b = block_stats(g, BlockAssignment({1, 1, 1, 0, 0, 0, 0}, 2));
  SbmPrior pa{{BetaParams(2, 1), BetaParams(1.5, 2)}};
  SbmPrior pb{{BetaParams(1.5, 2), BetaParams(2, 1)}};
  EXPECT_NEAR(quadrature_log_evidence(a, pa), quadrature_log_evidence(b, pb), 1e-9);
  Rng rng(1);
  EXPECT_THROW(quadrature_log_evidence(random_stats(rng, 4, 5), induced_sbm_prior(4)), UnsupportedError);
}

TEST(CompleteGraph, Examples) {
  for (std::int64_t n : {1, 6, 55}) {
    EXPECT_NEAR(complete_graph_log_evidence(single_block_stats(n, n), induced_sbm_prior(1)), -std::log(n + 1.0), 1e-13);
  }
  const BlockStats st = stats_of_partition(Graph::complete(3, true), {0, 0, 1}, 2);
  EXPECT_EQ(st.S(0, 0), 3);
  EXPECT_EQ(st.S(0, 1), 2);
  EXPECT_EQ(st.S(1, 1), 1);
  EXPECT_NEAR(complete_graph_log_evidence(st, induced_sbm_prior(2)), std::log(4.0 / 60), 1e-14);
  EXPECT_THROW(complete_graph_log_evidence(single_block_stats(3, 2), induced_sbm_prior(1)), DomainError);
  EXPECT_THROW(complete_graph_log_evidence(single_block_stats(3, 3), SbmPrior{{BetaParams(1, 1)}}), DomainError);
}

TEST(CompleteGraph, ErAlwaysWins) {
  Rng rng(99);
  for (int K = 2; K <= 5; ++K) {
    for (Eigen::Index n_v = K; n_v <= 50; ++n_v) {
      const Graph g = Graph::complete(n_v, true);
      const double er = -std::log(static_cast<double>(edge_count(g).n) + 1.0);
      for (int trial = 0; trial < 3; ++trial) {
        std::vector<int> labels(static_cast<std::size_t>(n_v));
        std::iota(labels.begin(), labels.begin() + K, 0);
        for (Eigen::Index i = K; i < n_v; ++i) labels[static_cast<std::size_t>(i)] = static_cast<int>(rng.uniform() * K);
        const BlockStats st = stats_of_partition(g, labels, K);
        EXPECT_LT(complete_graph_log_evidence(st, induced_sbm_prior(K)), er);
      }
    }
  }
}

// For n >= 2 and x_i > 2: prod x_i > 2^n (sum x_i / 2 - n + 1). At n = 1
// both sides equal x_1.
TEST(ProductInequality, RandomVectors) {
  Rng rng(7);
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = 2 + static_cast<int>(rng.uniform() * 19);
    double prod = 1.0, sum = 0.0;
    for (int i = 0; i < n; ++i) {
      const double x = 2.0 + 48.0 * rng.uniform();
      prod *= x;
      sum += x;
    }
    EXPECT_GT(prod, std::ldexp(0.5 * sum - n + 1.0, n));
  }
}

}  // namespace
}  // namespace occam
