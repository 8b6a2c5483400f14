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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "occam/errors.hpp"
#include "occam/random.hpp"

namespace occam {
namespace {

Graph from_edges(Eigen::Index n_v, bool loops, std::initializer_list<std::pair<int, int>> edges) {
  Adjacency a = Adjacency::Zero(n_v, n_v);
  for (auto [i, j] : edges) a(i, j) = a(j, i) = 1;
  return Graph(a, loops);
}

// Two-sample Kolmogorov-Smirnov statistic of integer samples.
double ks_statistic(std::vector<std::int64_t> a, std::vector<std::int64_t> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = a.size(), nb = b.size();
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const std::int64_t v = std::min(a[i], b[j]);
    while (i < a.size() && a[i] == v) ++i;
    while (j < b.size() && b[j] == v) ++j;
    d = std::max(d, std::abs(i / na - j / nb));
  }
  return d;
}

// Critical value at significance 1e-3.
double ks_critical(double na, double nb) { return 1.949 * std::sqrt((na + nb) / (na * nb)); }

TEST(PairCount, LoopConvention) {
  EXPECT_EQ(pair_count(3, true), 6);
  EXPECT_EQ(pair_count(3, false), 3);
  EXPECT_EQ(pair_count(100, true), 5050);
  EXPECT_EQ(pair_count(1, false), 0);
}

TEST(Graph, RejectsInvalidAdjacency) {
  Adjacency asym = Adjacency::Zero(3, 3);
  asym(0, 1) = 1;
  EXPECT_THROW(Graph(asym, true), DomainError);
  Adjacency two = Adjacency::Zero(2, 2);
  two(0, 1) = two(1, 0) = 2;
  EXPECT_THROW(Graph(two, true), DomainError);
  Adjacency loop = Adjacency::Zero(2, 2);
  loop(1, 1) = 1;
  EXPECT_THROW(Graph(loop, false), DomainError);
  EXPECT_NO_THROW(Graph(loop, true));
  EXPECT_THROW(Graph(Adjacency::Zero(2, 3), true), DomainError);
}

TEST(Graph, EdgeIndicatorsCanonicalOrder) {
  const Graph g = from_edges(3, true, {{0, 0}, {0, 1}, {1, 2}, {2, 2}});
  const std::vector<std::uint8_t> expect{1, 1, 0, 0, 1, 1};  // 11 12 13 22 23 33
  EXPECT_EQ(g.edge_indicators(), expect);
  const std::vector<std::uint8_t> no_loops{1, 0, 1};  // 12 13 23
  EXPECT_EQ(g.without_loops().edge_indicators(), no_loops);
}

TEST(EdgeCount, Examples) {
  EXPECT_EQ(edge_count(Graph::complete(3, true)).n, 6);
  EXPECT_EQ(edge_count(Graph::complete(3, true)).s, 6);
  EXPECT_EQ(edge_count(Graph::empty(4, false)).n, 6);
  EXPECT_EQ(edge_count(Graph::empty(4, false)).s, 0);
  const EdgeSummary es = edge_count(from_edges(3, true, {{0, 0}, {0, 1}, {1, 2}, {2, 2}}));
  EXPECT_EQ(es.n, 6);
  EXPECT_EQ(es.s, 4);
}

TEST(BlockStats, HandCountedExample) {
  // A11=1, A12=1, A13=0, A22=0, A23=1, A33=1; blocks {1,2},{3}.
  const Graph g = from_edges(3, true, {{0, 0}, {0, 1}, {1, 2}, {2, 2}});
  const BlockStats st = block_stats(g, BlockAssignment({0, 0, 1}, 2));
  EXPECT_EQ(st.S(0, 0), 2);
  EXPECT_EQ(st.O(0, 0), 1);
  EXPECT_EQ(st.S(0, 1), 1);
  EXPECT_EQ(st.O(0, 1), 1);
  EXPECT_EQ(st.S(1, 0), 1);
  EXPECT_EQ(st.S(1, 1), 1);
  EXPECT_EQ(st.O(1, 1), 0);
  EXPECT_EQ(st.degree_exponent(0), 5);
  EXPECT_EQ(st.min_exposure(), 1);
}

TEST(BlockStats, EmptyGraphAndSingleBlock) {
  const BlockStats st = block_stats(Graph::empty(5, false), BlockAssignment({0, 1, 1, 0, 1}, 2));
  EXPECT_TRUE((st.S.array() == 0).all());
  EXPECT_EQ(st.O(0, 0), 1);
  EXPECT_EQ(st.O(1, 1), 3);
  EXPECT_EQ(st.O(0, 1), 6);

  const Graph g = sample_er(9, 0.4, true, 3);
  const BlockStats one = block_stats(g, BlockAssignment::single_block(9));
  EXPECT_EQ(one.S(0, 0), edge_count(g).s);
  EXPECT_EQ(one.O(0, 0), edge_count(g).n - edge_count(g).s);
}

TEST(BlockStats, TotalsMatchEdgeCountProperty) {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const bool loops = trial % 2 == 0;
    const Eigen::Index n_v = 2 + static_cast<Eigen::Index>(rng.uniform() * 15);
    const int K = 1 + static_cast<int>(rng.uniform() * std::min<double>(4, n_v));
    std::vector<int> labels(static_cast<std::size_t>(n_v));
    for (int k = 0; k < K; ++k) labels[static_cast<std::size_t>(k)] = k;
    for (Eigen::Index i = K; i < n_v; ++i) labels[static_cast<std::size_t>(i)] = static_cast<int>(rng.uniform() * K);
    const Graph g = sample_er(n_v, 0.05 + 0.9 * rng.uniform(), loops, trial);
    const BlockStats st = block_stats(g, BlockAssignment(labels, K));
    const EdgeSummary es = edge_count(g);
    std::int64_t s = 0, n = 0;
    for (int k = 0; k < K; ++k) {
      for (int l = k; l < K; ++l) {
        s += st.S(k, l);
        n += st.S(k, l) + st.O(k, l);
        const auto sk = st.sizes[static_cast<std::size_t>(k)];
        const auto sl = st.sizes[static_cast<std::size_t>(l)];
        EXPECT_EQ(st.S(k, l) + st.O(k, l), k == l ? pair_count(sk, loops) : sk * sl);
      }
    }
    EXPECT_EQ(s, es.s);
    EXPECT_EQ(n, es.n);
    EXPECT_EQ(st.S, st.S.transpose());
    EXPECT_EQ(st.O, st.O.transpose());
  }
}

TEST(BlockAssignment, Validation) {
  EXPECT_THROW(BlockAssignment({0, 2}, 2), DomainError);
  EXPECT_THROW(BlockAssignment({0, 0}, 2), DomainError);  // block 2 unused
  EXPECT_EQ(BlockAssignment::from_one_based({1, 2, 2}), BlockAssignment({0, 1, 1}, 2));
  EXPECT_THROW(BlockAssignment::from_one_based({0, 1}), DomainError);
  const auto c = BlockAssignment::contiguous(7, 2);
  EXPECT_EQ(c.sizes()[0] + c.sizes()[1], 7);
  EXPECT_LE(std::abs(c.sizes()[0] - c.sizes()[1]), 1);
}

TEST(Samplers, DeterministicAndValid) {
  for (bool loops : {true, false}) {
    EXPECT_EQ(sample_er(30, 0.3, loops, 5), sample_er(30, 0.3, loops, 5));
    EXPECT_FALSE(sample_er(30, 0.3, loops, 5) == sample_er(30, 0.3, loops, 6));
    const Graph g = sample_sbm_rank1(Eigen::Vector2d(0.4, 0.8), BlockAssignment::contiguous(20, 2), loops, 9);
    EXPECT_EQ(g.loops_allowed(), loops);
    EXPECT_EQ(g.adjacency(), g.adjacency().transpose());
    if (!loops) {
      EXPECT_TRUE((g.adjacency().diagonal().array() == 0).all());
    }
  }
  EXPECT_THROW(sample_er(3, 0.0, true, 1), DomainError);
  EXPECT_THROW(sample_er(3, 1.0, true, 1), DomainError);
  EXPECT_THROW(sample_er(0, 0.5, true, 1), DomainError);
  Eigen::MatrixXd P = Eigen::MatrixXd::Constant(3, 3, 0.5);
  P(0, 1) = 0.4;
  EXPECT_THROW(sample_ie(P, true, 1), DomainError);
  EXPECT_THROW(sample_sbm_rank1(Eigen::Vector2d(0.5, 1.0), BlockAssignment::contiguous(4, 2), true, 1),
               DomainError);
}

TEST(Samplers, SingleVertexSelfLoop) {
  int ones = 0;
  for (std::uint64_t seed = 0; seed < 2000; ++seed) ones += sample_er(1, 0.5, true, seed).has_edge(0, 0);
  EXPECT_NEAR(ones / 2000.0, 0.5, 3 * std::sqrt(0.25 / 2000));
}

TEST(Samplers, ErDensityConcentrates) {
  const int reps = 10000;
  double total = 0.0;
  for (int r = 0; r < reps; ++r) total += edge_count(sample_er(3, 0.9, true, r)).s;
  const double n = reps * 6.0;
  EXPECT_NEAR(total / n, 0.9, 3 * std::sqrt(0.9 * 0.1 / n));
}

TEST(Samplers, IeWithConstantPMatchesEr) {
  const int reps = 10000;
  const Eigen::MatrixXd P = Eigen::MatrixXd::Constant(6, 6, 0.35);
  std::vector<std::int64_t> a, b;
  for (int r = 0; r < reps; ++r) {
    a.push_back(edge_count(sample_ie(P, true, 2 * r)).s);
    b.push_back(edge_count(sample_er(6, 0.35, true, 2 * r + 1)).s);
  }
  EXPECT_LT(ks_statistic(a, b), ks_critical(reps, reps));
}

TEST(Samplers, SbmWithConstantPositionMatchesEr) {
  const int reps = 10000;
  const Eigen::Vector2d x(0.6, 0.6);
  const BlockAssignment z = BlockAssignment::contiguous(6, 2);
  std::vector<std::int64_t> a, b;
  for (int r = 0; r < reps; ++r) {
    a.push_back(edge_count(sample_sbm_rank1(x, z, false, 2 * r)).s);
    b.push_back(edge_count(sample_er(6, 0.36, false, 2 * r + 1)).s);
  }
  EXPECT_LT(ks_statistic(a, b), ks_critical(reps, reps));
}

TEST(Samplers, SbmBlockDensities) {
  const BlockAssignment z = BlockAssignment::contiguous(400, 2);
  const BlockStats st = block_stats(sample_sbm_rank1(Eigen::Vector2d(0.2, 0.9), z, true, 77), z);
  auto density = [&](int k, int l) {
    return static_cast<double>(st.S(k, l)) / static_cast<double>(st.S(k, l) + st.O(k, l));
  };
  EXPECT_NEAR(density(0, 0), 0.04, 0.01);
  EXPECT_NEAR(density(0, 1), 0.18, 0.01);
  EXPECT_NEAR(density(1, 1), 0.81, 0.01);
}

}  // namespace
}  // namespace occam
