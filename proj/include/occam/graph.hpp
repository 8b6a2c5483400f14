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

#ifndef OCCAM_GRAPH_HPP_
#define OCCAM_GRAPH_HPP_

#include <cstdint>
#include <vector>

#include <Eigen/Core>

namespace occam {

using Adjacency = Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic>;
using CountMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

// Number of admissible vertex pairs: C(n_v, 2) + n_v with self-loops,
// C(n_v, 2) without.
std::int64_t pair_count(std::int64_t n_v, bool loops_allowed);

// Undirected simple-or-looped graph stored as a dense symmetric 0/1 matrix.
// Immutable once constructed; the constructor enforces symmetry, binary
// entries, and an empty diagonal when loops are not allowed.
class Graph {
 public:
  Graph(Adjacency adjacency, bool loops_allowed);

  static Graph empty(Eigen::Index n_v, bool loops_allowed);
  static Graph complete(Eigen::Index n_v, bool loops_allowed);

  Eigen::Index num_vertices() const { return adjacency_.rows(); }
  bool loops_allowed() const { return loops_allowed_; }
  const Adjacency& adjacency() const { return adjacency_; }
  bool has_edge(Eigen::Index i, Eigen::Index j) const { return adjacency_(i, j) != 0; }

  // Edge indicators a_i over admissible pairs in canonical order: upper
  // triangle, row-major, diagonal included iff loops are allowed.
  std::vector<std::uint8_t> edge_indicators() const;

  // Same graph under the no-self-loop convention (diagonal dropped).
  Graph without_loops() const;

  bool operator==(const Graph& other) const {
    return loops_allowed_ == other.loops_allowed_ && adjacency_ == other.adjacency_;
  }

 private:
  Adjacency adjacency_;
  bool loops_allowed_;
};

// Partition of the vertices into K blocks. Labels are stored 0-based;
// files and reports use 1-based labels.
class BlockAssignment {
 public:
  BlockAssignment(std::vector<int> labels, int num_blocks);

  static BlockAssignment from_one_based(const std::vector<int>& labels);
  static BlockAssignment single_block(Eigen::Index n_v);
  // Vertices split into K consecutive, nearly equal ranges.
  static BlockAssignment contiguous(Eigen::Index n_v, int num_blocks);

  int num_blocks() const { return num_blocks_; }
  Eigen::Index num_vertices() const { return static_cast<Eigen::Index>(labels_.size()); }
  const std::vector<int>& labels() const { return labels_; }
  int operator[](Eigen::Index v) const { return labels_[static_cast<std::size_t>(v)]; }
  std::vector<std::int64_t> sizes() const;

  bool operator==(const BlockAssignment& other) const = default;

 private:
  std::vector<int> labels_;
  int num_blocks_;
};

// Present/absent edge counts per unordered block pair. Both matrices are
// symmetric; S(k, l) + O(k, l) is the number of admissible pairs between
// blocks k and l.
struct BlockStats {
  CountMatrix S;
  CountMatrix O;
  std::vector<std::int64_t> sizes;
  bool loops_allowed = true;

  int num_blocks() const { return static_cast<int>(S.rows()); }
  // Exponent of x_k in the rank-1 likelihood: 2 S_kk + sum_{l != k} S_kl.
  std::int64_t degree_exponent(int k) const;
  // Smallest S + O over block pairs (k <= l).
  std::int64_t min_exposure() const;
  bool has_no_absent_pairs() const { return (O.array() == 0).all(); }
};

// Possible and observed edge counts.
struct EdgeSummary {
  std::int64_t n = 0;
  std::int64_t s = 0;
};

EdgeSummary edge_count(const Graph& g);

BlockStats block_stats(const Graph& g, const BlockAssignment& assignment);

// Block statistics built directly from counts, for tests and synthetic use.
// Validates non-negativity and symmetry.
BlockStats make_block_stats(CountMatrix S, CountMatrix O,
                            std::vector<std::int64_t> sizes, bool loops_allowed);

// Samplers. Every admissible upper-triangular pair is drawn independently in
// canonical order from an Rng keyed by `seed`.
Graph sample_er(Eigen::Index n_v, double p, bool loops_allowed, std::uint64_t seed);
Graph sample_ie(const Eigen::MatrixXd& P, bool loops_allowed, std::uint64_t seed);
Graph sample_sbm_rank1(const Eigen::VectorXd& x, const BlockAssignment& assignment,
                       bool loops_allowed, std::uint64_t seed);

}  // namespace occam

#endif  // OCCAM_GRAPH_HPP_
