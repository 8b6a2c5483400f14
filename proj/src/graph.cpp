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

#include "occam/graph.hpp"

#include <algorithm>
#include <string>

#include "occam/errors.hpp"
#include "occam/random.hpp"

namespace occam {

std::int64_t pair_count(std::int64_t n_v, bool loops_allowed) {
  const std::int64_t off = n_v * (n_v - 1) / 2;
  return loops_allowed ? off + n_v : off;
}

Graph::Graph(Adjacency adjacency, bool loops_allowed)
    : adjacency_(std::move(adjacency)), loops_allowed_(loops_allowed) {
  const Eigen::Index n = adjacency_.rows();
  if (n == 0 || adjacency_.cols() != n) {
    throw DomainError("Graph: adjacency must be a nonempty square matrix");
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!loops_allowed_ && adjacency_(i, i) != 0) {
      throw DomainError("Graph: self-loop at vertex " + std::to_string(i + 1) +
                        " but loops are not allowed");
    }
    for (Eigen::Index j = i; j < n; ++j) {
      if (adjacency_(i, j) > 1) throw DomainError("Graph: entries must be 0 or 1");
      if (adjacency_(i, j) != adjacency_(j, i)) {
        throw DomainError("Graph: adjacency is not symmetric at (" + std::to_string(i + 1) +
                          ", " + std::to_string(j + 1) + ")");
      }
    }
  }
}

Graph Graph::empty(Eigen::Index n_v, bool loops_allowed) {
  return Graph(Adjacency::Zero(n_v, n_v), loops_allowed);
}

Graph Graph::complete(Eigen::Index n_v, bool loops_allowed) {
  Adjacency a = Adjacency::Ones(n_v, n_v);
  if (!loops_allowed) a.diagonal().setZero();
  return Graph(std::move(a), loops_allowed);
}

std::vector<std::uint8_t> Graph::edge_indicators() const {
  const Eigen::Index n = num_vertices();
  std::vector<std::uint8_t> a;
  a.reserve(static_cast<std::size_t>(pair_count(n, loops_allowed_)));
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = loops_allowed_ ? i : i + 1; j < n; ++j) a.push_back(adjacency_(i, j));
  }
  return a;
}

Graph Graph::without_loops() const {
  Adjacency a = adjacency_;
  a.diagonal().setZero();
  return Graph(std::move(a), false);
}

BlockAssignment::BlockAssignment(std::vector<int> labels, int num_blocks)
    : labels_(std::move(labels)), num_blocks_(num_blocks) {
  if (num_blocks_ < 1) throw DomainError("BlockAssignment: K must be positive");
  std::vector<bool> seen(static_cast<std::size_t>(num_blocks_), false);
  for (int l : labels_) {
    if (l < 0 || l >= num_blocks_) {
      throw DomainError("BlockAssignment: label " + std::to_string(l + 1) +
                        " outside 1.." + std::to_string(num_blocks_));
    }
    seen[static_cast<std::size_t>(l)] = true;
  }
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) {
    throw DomainError("BlockAssignment: every block must contain a vertex");
  }
}

BlockAssignment BlockAssignment::from_one_based(const std::vector<int>& labels) {
  if (labels.empty()) throw DomainError("BlockAssignment: no labels");
  std::vector<int> zero(labels.size());
  std::transform(labels.begin(), labels.end(), zero.begin(), [](int l) { return l - 1; });
  return BlockAssignment(std::move(zero), *std::max_element(labels.begin(), labels.end()));
}

BlockAssignment BlockAssignment::single_block(Eigen::Index n_v) {
  return BlockAssignment(std::vector<int>(static_cast<std::size_t>(n_v), 0), 1);
}

BlockAssignment BlockAssignment::contiguous(Eigen::Index n_v, int num_blocks) {
  if (num_blocks < 1 || num_blocks > n_v) {
    throw DomainError("BlockAssignment::contiguous: need 1 <= K <= n_v");
  }
  std::vector<int> labels(static_cast<std::size_t>(n_v));
  for (Eigen::Index v = 0; v < n_v; ++v) {
    labels[static_cast<std::size_t>(v)] = static_cast<int>(v * num_blocks / n_v);
  }
  return BlockAssignment(std::move(labels), num_blocks);
}

std::vector<std::int64_t> BlockAssignment::sizes() const {
  std::vector<std::int64_t> sz(static_cast<std::size_t>(num_blocks_), 0);
  for (int l : labels_) ++sz[static_cast<std::size_t>(l)];
  return sz;
}

std::int64_t BlockStats::degree_exponent(int k) const {
  std::int64_t e = 2 * S(k, k);
  for (int l = 0; l < num_blocks(); ++l) {
    if (l != k) e += S(k, l);
  }
  return e;
}

std::int64_t BlockStats::min_exposure() const {
  const CountMatrix total = S + O;
  std::int64_t m = total(0, 0);
  for (int k = 0; k < num_blocks(); ++k) {
    for (int l = k; l < num_blocks(); ++l) m = std::min(m, total(k, l));
  }
  return m;
}

EdgeSummary edge_count(const Graph& g) {
  EdgeSummary es;
  es.n = pair_count(g.num_vertices(), g.loops_allowed());
  const Eigen::Index n = g.num_vertices();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = g.loops_allowed() ? i : i + 1; j < n; ++j) es.s += g.adjacency()(i, j);
  }
  return es;
}

BlockStats block_stats(const Graph& g, const BlockAssignment& assignment) {
  const Eigen::Index n = g.num_vertices();
  if (assignment.num_vertices() != n) {
    throw DomainError("block_stats: assignment covers " +
                      std::to_string(assignment.num_vertices()) + " vertices, graph has " +
                      std::to_string(n));
  }
  const int K = assignment.num_blocks();
  BlockStats st;
  st.S = CountMatrix::Zero(K, K);
  st.O = CountMatrix::Zero(K, K);
  st.sizes = assignment.sizes();
  st.loops_allowed = g.loops_allowed();
  for (Eigen::Index i = 0; i < n; ++i) {
    const int bi = assignment[i];
    for (Eigen::Index j = g.loops_allowed() ? i : i + 1; j < n; ++j) {
      const int bj = assignment[j];
      const int lo = std::min(bi, bj);
      const int hi = std::max(bi, bj);
      if (g.adjacency()(i, j)) {
        ++st.S(lo, hi);
      } else {
        ++st.O(lo, hi);
      }
    }
  }
  for (int k = 0; k < K; ++k) {
    for (int l = k + 1; l < K; ++l) {
      st.S(l, k) = st.S(k, l);
      st.O(l, k) = st.O(k, l);
    }
  }
  return st;
}

BlockStats make_block_stats(CountMatrix S, CountMatrix O, std::vector<std::int64_t> sizes,
                            bool loops_allowed) {
  const Eigen::Index K = S.rows();
  if (K == 0 || S.cols() != K || O.rows() != K || O.cols() != K) {
    throw DomainError("make_block_stats: S and O must be K x K");
  }
  if ((S.array() < 0).any() || (O.array() < 0).any()) {
    throw DomainError("make_block_stats: counts must be nonnegative");
  }
  if (S != S.transpose() || O != O.transpose()) {
    throw DomainError("make_block_stats: counts must be symmetric");
  }
  BlockStats st{std::move(S), std::move(O), std::move(sizes), loops_allowed};
  if (st.sizes.empty()) st.sizes.assign(static_cast<std::size_t>(K), 0);
  return st;
}

namespace {

template <typename ProbabilityFn>
Graph sample_independent(Eigen::Index n_v, bool loops_allowed, std::uint64_t seed,
                         ProbabilityFn&& prob) {
  Rng rng(seed);
  Adjacency a = Adjacency::Zero(n_v, n_v);
  for (Eigen::Index i = 0; i < n_v; ++i) {
    for (Eigen::Index j = loops_allowed ? i : i + 1; j < n_v; ++j) {
      const std::uint8_t e = rng.bernoulli(prob(i, j)) ? 1 : 0;
      a(i, j) = e;
      a(j, i) = e;
    }
  }
  return Graph(std::move(a), loops_allowed);
}

bool in_open_unit(double p) { return p > 0.0 && p < 1.0; }

}  // namespace

Graph sample_er(Eigen::Index n_v, double p, bool loops_allowed, std::uint64_t seed) {
  if (n_v < 1) throw DomainError("sample_er: n_v must be positive");
  if (!in_open_unit(p)) throw DomainError("sample_er: p must lie in (0, 1)");
  return sample_independent(n_v, loops_allowed, seed, [p](Eigen::Index, Eigen::Index) { return p; });
}

Graph sample_ie(const Eigen::MatrixXd& P, bool loops_allowed, std::uint64_t seed) {
  const Eigen::Index n = P.rows();
  if (n < 1 || P.cols() != n) throw DomainError("sample_ie: P must be square and nonempty");
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      if (P(i, j) != P(j, i)) throw DomainError("sample_ie: P must be symmetric");
      if ((loops_allowed || i != j) && !in_open_unit(P(i, j))) {
        throw DomainError("sample_ie: entries of P must lie in (0, 1)");
      }
    }
  }
  return sample_independent(n, loops_allowed, seed,
                            [&P](Eigen::Index i, Eigen::Index j) { return P(i, j); });
}

Graph sample_sbm_rank1(const Eigen::VectorXd& x, const BlockAssignment& assignment,
                       bool loops_allowed, std::uint64_t seed) {
  if (x.size() != assignment.num_blocks()) {
    throw DomainError("sample_sbm_rank1: need one latent position per block");
  }
  for (Eigen::Index k = 0; k < x.size(); ++k) {
    if (!in_open_unit(x(k))) throw DomainError("sample_sbm_rank1: positions must lie in (0, 1)");
  }
  return sample_independent(assignment.num_vertices(), loops_allowed, seed,
                            [&](Eigen::Index i, Eigen::Index j) {
                              return x(assignment[i]) * x(assignment[j]);
                            });
}

}  // namespace occam
