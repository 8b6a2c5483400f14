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

#ifndef OCCAM_SIMULATE_HPP_
#define OCCAM_SIMULATE_HPP_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "occam/config.hpp"
#include "occam/graph.hpp"
#include "occam/selection.hpp"

namespace occam {

// Empty cells are written as "null"; reals with 17 significant digits.
using CsvCell = std::variant<std::monostate, std::int64_t, double, std::string>;

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<CsvCell>> rows;

  void write(std::ostream& out) const;
  std::string str() const;
  // Column index by name; throws DomainError when absent.
  std::size_t column(const std::string& name) const;
};

std::string format_real(double v);

// Calls fn(i) for i in [0, count) on `threads` workers. The first exception
// thrown by any call is rethrown after all workers stop.
void parallel_for(int count, int threads, const std::function<void(int)>& fn);

// Edge count of sample_er(n_v, p, loops, seed) without building the graph.
std::int64_t sample_er_edge_count(std::int64_t n_v, double p, bool loops_allowed,
                                  std::uint64_t seed);

// Symmetric matrix of independent Uniform(0, 1) edge probabilities, drawn in
// canonical pair order. The diagonal is 0.5 when loops are not allowed.
Eigen::MatrixXd random_probability_matrix(Eigen::Index n_v, bool loops_allowed, std::uint64_t seed);

// Index of the winning candidate, or -1 when every candidate failed.
int select_index(const Graph& g, const std::vector<ModelSpec>& candidates);

// Per (n_v, p): fraction of ER(p) graphs with a positive IE-vs-ER log Bayes
// factor under matched priors.
CsvTable run_bayes_factor_sweep(const SweepConfig& cfg);
// Per (n_v, p): selection fraction of each default candidate on ER(p) graphs.
CsvTable run_er_sweep(const SweepConfig& cfg);
// Per (n_v, x1, x2): selection fractions on rank-1 two-block SBM graphs with
// two equal contiguous blocks.
CsvTable run_sbm_heatmap(const SweepConfig& cfg);
// Per n_v and random P: selection fractions on inner_reps IE(P) graphs.
CsvTable run_ie_histogram(const SweepConfig& cfg);
// Per (n_v, eps, delta): IE selection lower bound; null where eps is
// inadmissible.
CsvTable run_bound_surface(const SweepConfig& cfg);

struct AnalyzeResult {
  nlohmann::json reports = nlohmann::json::array();  // one entry per file
  CsvTable summary;  // model, count, min, q1, median, q3, max, wins
  int failed_files = 0;
  int numeric_failures = 0;  // subset of failed_files
};

// Named partitions for analyze: NAME=PATH (or bare PATH, named "SBM-known")
// where PATH may contain "{stem}", replaced by the graph file's stem.
struct NamedPartition {
  std::string name;
  std::string path_pattern;
};
NamedPartition parse_named_partition(const std::string& spec);

// Model selection over graph files under the no-self-loop convention. Files
// that fail to load are recorded in `reports` with an error and skipped.
// Throws DomainError for an empty file list.
AnalyzeResult analyze(const std::vector<std::string>& paths, const std::vector<int>& sbm_blocks,
                      const std::vector<NamedPartition>& partitions, bool drop_loops = true,
                      bool membership_prior = false);

// Dispatch by experiment name; analyze is not a table experiment. Throws
// UnsupportedError for unknown names.
CsvTable run_experiment(const std::string& experiment, const SweepConfig& cfg);

}  // namespace occam

#endif  // OCCAM_SIMULATE_HPP_
