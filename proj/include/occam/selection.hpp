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

#ifndef OCCAM_SELECTION_HPP_
#define OCCAM_SELECTION_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "occam/beta.hpp"
#include "occam/evidence_sbm.hpp"
#include "occam/graph.hpp"
#include "occam/membership.hpp"

namespace occam {

enum class ModelKind { kER, kIE, kSBM };
enum class EvidenceMethod { kClosedForm, kLaplace, kQuadrature, kCompleteGraph };

const char* to_string(ModelKind kind);
const char* to_string(EvidenceMethod method);

// A candidate model. Priors left empty are the matched defaults:
// ER Beta(1, 1), IE Beta(1/n, 1/n) per edge, SBM Beta(2, 1) per block.
struct ModelSpec {
  ModelKind kind = ModelKind::kER;
  int K = 1;                                   // SBM only
  std::optional<BlockAssignment> membership;   // SBM: empty means estimate
  std::uint64_t embedding_seed = kDefaultEmbeddingSeed;
  std::optional<BetaParams> er_prior;
  std::optional<BetaParams> ie_prior;          // shared by every edge
  std::optional<SbmPrior> sbm_prior;
  // Estimated membership only: add log_membership_prior(z) to the evidence so
  // that choosing z from the data is paid for.
  bool membership_prior = false;
  std::string name;                            // display name override

  static ModelSpec er();
  static ModelSpec ie();
  static ModelSpec sbm(int K);
  static ModelSpec sbm_known(BlockAssignment membership, std::string name = {});

  // "ER", "IE", "SBM-2", or the explicit name.
  std::string label() const;
};

struct Diagnostics {
  bool converged = true;
  bool boundary = false;
  int iterations = 0;
  std::string fallback_reason;  // why Laplace was not used, if it was tried
};

struct EvidenceReport {
  ModelSpec model;
  double log_evidence = kNegInf;
  EvidenceMethod method = EvidenceMethod::kClosedForm;
  std::optional<Eigen::VectorXd> map_point;
  Diagnostics diagnostics;
  std::optional<BlockAssignment> membership_used;
  std::optional<double> membership_log_prior;  // included in log_evidence
  std::vector<std::string> warnings;
  bool unmatched = false;  // a prior override breaks hyperparameter matching
  std::string error;       // set by select_model when evaluation failed

  bool ok() const { return error.empty(); }
};

// log P(z) for labels drawn iid from block proportions with a uniform
// Dirichlet prior, summed over the K! relabelings of z:
//   log K! + log Gamma(K) + sum_k log Gamma(n_k + 1) - log Gamma(n_v + K).
double log_membership_prior(const BlockAssignment& z);

// Evidence of one candidate. Errors are rethrown with the same type and the
// model label prepended.
EvidenceReport evaluate_model(const Graph& g, const ModelSpec& spec);

struct SelectionResult {
  std::size_t winner = 0;  // index into reports / candidates
  std::vector<EvidenceReport> reports;

  const EvidenceReport& best() const { return reports[winner]; }
};

// Evaluates every candidate and picks the largest evidence; ties go to the
// earlier candidate. Failed candidates carry `error` and are skipped. Throws
// NumericError when every candidate fails.
SelectionResult select_model(const Graph& g, const std::vector<ModelSpec>& candidates);

// {ER, SBM-K (estimated membership) for each K, IE}.
std::vector<ModelSpec> default_registry(const std::vector<int>& sbm_blocks = {2},
                                        bool membership_prior = false);

}  // namespace occam

#endif  // OCCAM_SELECTION_HPP_
