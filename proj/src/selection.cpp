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

#include "occam/selection.hpp"

#include <cmath>
#include <utility>

#include "occam/errors.hpp"
#include "occam/evidence_er_ie.hpp"

namespace occam {

const char* to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::kER: return "ER";
    case ModelKind::kIE: return "IE";
    case ModelKind::kSBM: return "SBM";
  }
  return "?";
}

const char* to_string(EvidenceMethod method) {
  switch (method) {
    case EvidenceMethod::kClosedForm: return "closed_form";
    case EvidenceMethod::kLaplace: return "laplace";
    case EvidenceMethod::kQuadrature: return "quadrature";
    case EvidenceMethod::kCompleteGraph: return "complete_graph";
  }
  return "?";
}

ModelSpec ModelSpec::er() { return ModelSpec{}; }

ModelSpec ModelSpec::ie() {
  ModelSpec s;
  s.kind = ModelKind::kIE;
  return s;
}

ModelSpec ModelSpec::sbm(int K) {
  if (K < 1) throw DomainError("ModelSpec::sbm: K must be >= 1");
  ModelSpec s;
  s.kind = ModelKind::kSBM;
  s.K = K;
  return s;
}

ModelSpec ModelSpec::sbm_known(BlockAssignment membership, std::string name) {
  ModelSpec s = sbm(membership.num_blocks());
  s.membership = std::move(membership);
  s.name = std::move(name);
  return s;
}

std::string ModelSpec::label() const {
  if (!name.empty()) return name;
  if (kind == ModelKind::kSBM) return "SBM-" + std::to_string(K);
  return to_string(kind);
}

namespace {

EvidenceReport evaluate_er(const Graph& g, const ModelSpec& spec, EvidenceReport r) {
  const EdgeSummary es = edge_count(g);
  const BetaParams prior = spec.er_prior.value_or(uniform_er_prior());
  r.unmatched = spec.er_prior.has_value() && !(prior == uniform_er_prior());
  r.log_evidence = log_evidence_er(es, prior);
  if (prior.alpha + prior.beta + static_cast<double>(es.n) > 2.0) {
    r.map_point = Eigen::VectorXd::Constant(1, map_er(es, prior));
  }
  return r;
}

EvidenceReport evaluate_ie(const Graph& g, const ModelSpec& spec, EvidenceReport r) {
  const EdgeSummary es = edge_count(g);
  const BetaParams matched = matched_ie_prior(es.n);
  const BetaParams prior = spec.ie_prior.value_or(matched);
  r.unmatched = spec.ie_prior.has_value() && !(prior == matched);
  r.log_evidence = log_evidence_ie(es, prior);
  return r;
}

EvidenceReport evaluate_sbm(const Graph& g, const ModelSpec& spec, EvidenceReport r) {
  const int K = spec.K;
  BlockAssignment z = spec.membership ? *spec.membership
                                      : estimate_membership(g, K, spec.embedding_seed);
  if (z.num_vertices() != g.num_vertices()) {
    throw DomainError("membership has " + std::to_string(z.num_vertices()) +
                      " vertices, graph has " + std::to_string(g.num_vertices()));
  }
  if (z.num_blocks() != K) throw DomainError("membership block count differs from K");
  const SbmPrior induced = induced_sbm_prior(K);
  const SbmPrior prior = spec.sbm_prior.value_or(induced);
  if (prior.num_blocks() != K) throw DomainError("SBM prior must have K blocks");
  r.unmatched = spec.sbm_prior.has_value() && !prior.is_induced();
  const BlockStats stats = block_stats(g, z);
  const double z_prior =
      !spec.membership && spec.membership_prior ? log_membership_prior(z) : 0.0;
  if (!spec.membership && spec.membership_prior) r.membership_log_prior = z_prior;
  r.membership_used = std::move(z);

  if (stats.has_no_absent_pairs() && prior.is_induced()) {
    r.method = EvidenceMethod::kCompleteGraph;
    r.log_evidence = complete_graph_log_evidence(stats, prior) + z_prior;
    r.diagnostics.boundary = true;
    return r;
  }
  try {
    const LaplaceResult lr = laplace_log_evidence(stats, prior);
    r.method = EvidenceMethod::kLaplace;
    r.log_evidence = lr.log_evidence + z_prior;
    r.map_point = lr.x_star;
    r.diagnostics.converged = lr.converged;
    r.diagnostics.boundary = lr.boundary_flag;
    r.diagnostics.iterations = lr.iterations;
    return r;
  } catch (const ApproximationError& e) {
    if (K > 3) throw;
    r.diagnostics.fallback_reason = e.what();
  }
  const LaplaceResult mr = map_sbm(stats, prior);
  r.map_point = mr.x_star;
  r.diagnostics.converged = mr.converged;
  r.diagnostics.boundary = mr.boundary_flag;
  r.diagnostics.iterations = mr.iterations;
  r.method = EvidenceMethod::kQuadrature;
  r.log_evidence = quadrature_log_evidence(stats, prior) + z_prior;
  return r;
}

template <typename E>
[[noreturn]] void rethrow_labeled(const E& e, const std::string& label) {
  throw E(label + ": " + e.what());
}

}  // namespace

double log_membership_prior(const BlockAssignment& z) {
  const double K = z.num_blocks();
  double lp = std::lgamma(K + 1.0) + std::lgamma(K) -
              std::lgamma(static_cast<double>(z.num_vertices()) + K);
  for (std::int64_t n_k : z.sizes()) lp += std::lgamma(static_cast<double>(n_k) + 1.0);
  return lp;
}

EvidenceReport evaluate_model(const Graph& g, const ModelSpec& spec) {
  EvidenceReport r;
  r.model = spec;
  const std::string label = spec.label();
  try {
    switch (spec.kind) {
      case ModelKind::kER: r = evaluate_er(g, spec, std::move(r)); break;
      case ModelKind::kIE: r = evaluate_ie(g, spec, std::move(r)); break;
      case ModelKind::kSBM: r = evaluate_sbm(g, spec, std::move(r)); break;
    }
  } catch (const ApproximationError& e) {
    rethrow_labeled(e, label);
  } catch (const NumericError& e) {
    rethrow_labeled(e, label);
  } catch (const BoundaryError& e) {
    rethrow_labeled(e, label);
  } catch (const DomainError& e) {
    rethrow_labeled(e, label);
  } catch (const UnsupportedError& e) {
    rethrow_labeled(e, label);
  }
  if (r.unmatched) r.warnings.push_back("prior overridden: evidence is not hyperparameter-matched");
  if ((g.adjacency().array() == 0).all()) {
    r.warnings.push_back("graph has no edges: the generative model is not identifiable");
  }
  return r;
}

SelectionResult select_model(const Graph& g, const std::vector<ModelSpec>& candidates) {
  if (candidates.empty()) throw DomainError("select_model: no candidates");
  SelectionResult out;
  out.reports.reserve(candidates.size());
  bool any = false;
  std::string failures;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    try {
      out.reports.push_back(evaluate_model(g, candidates[i]));
    } catch (const std::exception& e) {
      EvidenceReport r;
      r.model = candidates[i];
      r.error = e.what();
      out.reports.push_back(std::move(r));
      failures += (failures.empty() ? "" : "; ") + std::string(e.what());
      continue;
    }
    if (!any || out.reports[i].log_evidence > out.reports[out.winner].log_evidence) {
      out.winner = i;
      any = true;
    }
  }
  if (!any) throw NumericError("select_model: every candidate failed: " + failures);
  return out;
}

std::vector<ModelSpec> default_registry(const std::vector<int>& sbm_blocks, bool membership_prior) {
  std::vector<ModelSpec> reg{ModelSpec::er()};
  for (int K : sbm_blocks) {
    reg.push_back(ModelSpec::sbm(K));
    reg.back().membership_prior = membership_prior;
  }
  reg.push_back(ModelSpec::ie());
  return reg;
}

}  // namespace occam
