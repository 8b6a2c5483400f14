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

#ifndef OCCAM_MEMBERSHIP_HPP_
#define OCCAM_MEMBERSHIP_HPP_

#include <cstdint>

#include <Eigen/Core>

#include "occam/graph.hpp"

namespace occam {

inline constexpr std::uint64_t kDefaultEmbeddingSeed = 0x5eed0a5eULL;

// Rank-1 adjacency spectral embedding.
struct Embedding {
  Eigen::VectorXd values;  // u * sqrt(sigma), sum >= 0
  double sigma = 0.0;      // leading singular value of A
  double residual = 0.0;   // ||A^T A v - sigma^2 v|| at termination
  int iterations = 0;
  bool converged = false;
};

struct PowerIterationOptions {
  double rel_tol = 1e-10;
  int max_iter = 10000;
};

// Leading pair of A^T A by seeded power iteration. Works on any real
// symmetric matrix so exact low-rank inputs can be embedded directly.
Embedding ase_rank1(const Eigen::MatrixXd& A, std::uint64_t seed = kDefaultEmbeddingSeed,
                    const PowerIterationOptions& opts = {});
// Throws DomainError for graphs without edges.
Embedding ase_rank1(const Graph& g, std::uint64_t seed = kDefaultEmbeddingSeed,
                    const PowerIterationOptions& opts = {});

// Globally optimal 1-D K-means (minimum within-cluster sum of squares).
// Equal values always share a cluster; blocks are numbered by ascending
// centroid. Throws DomainError if K exceeds the number of distinct values.
BlockAssignment cluster_1d(const Eigen::VectorXd& values, int num_blocks);

// Within-cluster sum of squares of a labelling.
double within_cluster_ss(const Eigen::VectorXd& values, const BlockAssignment& assignment);

// cluster_1d(ase_rank1(g).values, K); K = 1 is the single block.
BlockAssignment estimate_membership(const Graph& g, int num_blocks,
                                    std::uint64_t seed = kDefaultEmbeddingSeed);

// Fraction of vertices on which two labellings agree, maximized over block
// relabelings of `b`. Brute force over permutations; K <= 8.
double label_agreement(const BlockAssignment& a, const BlockAssignment& b);

}  // namespace occam

#endif  // OCCAM_MEMBERSHIP_HPP_
