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

#include "occam/membership.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "occam/errors.hpp"
#include "occam/random.hpp"

namespace occam {

Embedding ase_rank1(const Eigen::MatrixXd& A, std::uint64_t seed,
                    const PowerIterationOptions& opts) {
  if (A.rows() != A.cols() || A.rows() == 0) throw DomainError("ase_rank1: need a square matrix");
  const Eigen::Index n = A.rows();
  Rng rng(seed);
  Eigen::VectorXd v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = 0.5 + rng.uniform();
  v.normalize();

  Embedding e;
  double lambda = 0.0;
  for (e.iterations = 1; e.iterations <= opts.max_iter; ++e.iterations) {
    const Eigen::VectorXd w = A.transpose() * (A * v);
    lambda = v.dot(w);
    const double norm = w.norm();
    if (norm == 0.0) throw DomainError("ase_rank1: matrix is zero, embedding is degenerate");
    e.residual = (w - lambda * v).norm();
    if (e.residual <= opts.rel_tol * lambda) {
      e.converged = true;
      break;
    }
    v = w / norm;
  }
  e.iterations = std::min(e.iterations, opts.max_iter);
  if (!e.converged) e.converged = e.residual <= 1e-8 * lambda;
  e.sigma = std::sqrt(lambda);
  if (v.sum() < 0.0) v = -v;
  e.values = v * std::sqrt(e.sigma);
  return e;
}

Embedding ase_rank1(const Graph& g, std::uint64_t seed, const PowerIterationOptions& opts) {
  if ((g.adjacency().array() == 0).all()) {
    throw DomainError("ase_rank1: graph has no edges, embedding is degenerate");
  }
  return ase_rank1(g.adjacency().cast<double>().eval(), seed, opts);
}

BlockAssignment cluster_1d(const Eigen::VectorXd& values, int num_blocks) {
  const Eigen::Index n = values.size();
  if (num_blocks < 1) throw DomainError("cluster_1d: K must be >= 1");
  if (!values.allFinite()) throw DomainError("cluster_1d: values must be finite");

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return values(a) < values(b); });

  // Group equal values; the DP runs over distinct values with multiplicity.
  std::vector<double> uniq;
  std::vector<double> count;
  for (Eigen::Index idx : order) {
    if (uniq.empty() || values(idx) != uniq.back()) {
      uniq.push_back(values(idx));
      count.push_back(1.0);
    } else {
      count.back() += 1.0;
    }
  }
  const int m = static_cast<int>(uniq.size());
  const int K = num_blocks;
  if (K > m) throw DomainError("cluster_1d: K exceeds the number of distinct values");

  const double shift = values.mean();
  std::vector<double> c(m + 1, 0.0), s1(m + 1, 0.0), s2(m + 1, 0.0);
  for (int i = 0; i < m; ++i) {
    const double y = uniq[static_cast<std::size_t>(i)] - shift;
    const double w = count[static_cast<std::size_t>(i)];
    c[i + 1] = c[i] + w;
    s1[i + 1] = s1[i] + w * y;
    s2[i + 1] = s2[i] + w * y * y;
  }
  // SSE of distinct values [i, j).
  auto sse = [&](int i, int j) {
    const double w = c[j] - c[i];
    const double s = s1[j] - s1[i];
    return std::max(0.0, (s2[j] - s2[i]) - s * s / w);
  };

  const double inf = std::numeric_limits<double>::infinity();
  // cost[k][j]: best SSE of the first j distinct values in k clusters.
  std::vector<std::vector<double>> cost(K + 1, std::vector<double>(m + 1, inf));
  std::vector<std::vector<int>> split(K + 1, std::vector<int>(m + 1, 0));
  cost[0][0] = 0.0;
  for (int k = 1; k <= K; ++k) {
    for (int j = k; j <= m - (K - k); ++j) {
      for (int i = k - 1; i < j; ++i) {
        const double cand = cost[k - 1][i] + sse(i, j);
        if (cand < cost[k][j]) {  // strict: earliest split wins ties
          cost[k][j] = cand;
          split[k][j] = i;
        }
      }
    }
  }

  std::vector<int> group_label(static_cast<std::size_t>(m));
  int j = m;
  for (int k = K; k >= 1; --k) {
    const int i = split[k][j];
    for (int t = i; t < j; ++t) group_label[static_cast<std::size_t>(t)] = k - 1;
    j = i;
  }

  std::vector<int> labels(static_cast<std::size_t>(n));
  int g = -1;
  double prev = 0.0;
  for (std::size_t r = 0; r < order.size(); ++r) {
    const double v = values(order[r]);
    if (r == 0 || v != prev) ++g;
    prev = v;
    labels[static_cast<std::size_t>(order[r])] = group_label[static_cast<std::size_t>(g)];
  }
  return BlockAssignment(std::move(labels), K);
}

double within_cluster_ss(const Eigen::VectorXd& values, const BlockAssignment& assignment) {
  const int K = assignment.num_blocks();
  std::vector<double> sum(static_cast<std::size_t>(K), 0.0), cnt(static_cast<std::size_t>(K), 0.0);
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    sum[static_cast<std::size_t>(assignment[i])] += values(i);
    cnt[static_cast<std::size_t>(assignment[i])] += 1.0;
  }
  double acc = 0.0;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    const auto k = static_cast<std::size_t>(assignment[i]);
    const double d = values(i) - sum[k] / cnt[k];
    acc += d * d;
  }
  return acc;
}

BlockAssignment estimate_membership(const Graph& g, int num_blocks, std::uint64_t seed) {
  if (num_blocks < 1) throw DomainError("estimate_membership: K must be >= 1");
  if (num_blocks == 1) return BlockAssignment::single_block(g.num_vertices());
  return cluster_1d(ase_rank1(g, seed).values, num_blocks);
}

double label_agreement(const BlockAssignment& a, const BlockAssignment& b) {
  if (a.num_vertices() != b.num_vertices()) throw DomainError("label_agreement: size mismatch");
  const int K = std::max(a.num_blocks(), b.num_blocks());
  if (K > 8) throw UnsupportedError("label_agreement: K > 8");
  const Eigen::Index n = a.num_vertices();
  if (n == 0) return 1.0;
  std::vector<int> perm(static_cast<std::size_t>(K));
  std::iota(perm.begin(), perm.end(), 0);
  Eigen::Index best = 0;
  do {
    Eigen::Index hit = 0;
    for (Eigen::Index i = 0; i < n; ++i) hit += a[i] == perm[static_cast<std::size_t>(b[i])];
    best = std::max(best, hit);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return static_cast<double>(best) / static_cast<double>(n);
}

}  // namespace occam
