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

#ifndef OCCAM_EVIDENCE_ER_IE_HPP_
#define OCCAM_EVIDENCE_ER_IE_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "occam/beta.hpp"
#include "occam/graph.hpp"

namespace occam {

// Uniform prior on the ER edge probability.
inline BetaParams uniform_er_prior() { return BetaParams(1.0, 1.0); }

// Per-edge IE prior matched to the uniform ER prior: Beta(1/n, 1/n).
BetaParams matched_ie_prior(std::int64_t n);

// log B(alpha + s, beta + n - s) - log B(alpha, beta).
double log_evidence_er(const EdgeSummary& es, const BetaParams& prior);

// Posterior mode of p, clamped to [0, 1]. Throws DomainError when the mode
// is undefined (alpha + beta + n <= 2).
double map_er(const EdgeSummary& es, const BetaParams& prior);

// log f(A | p) - log rho(p | A) + log rho(p) at an interior p. Equal to
// log_evidence_er for every p in (0, 1).
double log_evidence_er_at(const EdgeSummary& es, const BetaParams& prior, double p);

// The same identity evaluated at the MAP. Empty when the MAP is on the
// boundary, in which case callers use log_evidence_er.
std::optional<double> log_evidence_er_via_map(const EdgeSummary& es, const BetaParams& prior);

// sum a_i log(alpha_i / (alpha_i + beta_i)) + (1 - a_i) log(beta_i / (alpha_i + beta_i)).
double log_evidence_ie(std::span<const std::uint8_t> a, std::span<const BetaParams> priors);

// Same with one prior shared by every edge; depends on a only through (n, s).
double log_evidence_ie(const EdgeSummary& es, const BetaParams& prior);

// log(E_IE / E_ER) for a uniform ER prior and IE priors with common mean
// lambda: s log lambda + (n - s) log(1 - lambda) + log(n + 1) + log C(n, s).
double log_bayes_factor_ie_er(const EdgeSummary& es, double lambda);

// BIC of the IE model, -(n/2) log n_v, for any graph on n_v vertices.
double bic_ie(std::int64_t n_v, bool loops_allowed);

// Lower bound on the probability that the evidence selects IE when the graph
// is IE(p), together with the admissibility bands it requires.
struct IeSelectionBound {
  double value;       // P(Z^2 <= (1 - n^{-delta/2})^2 log n) - eps
  double p_min;       // edge probabilities must lie in (p_min, 1 - p_min)
  double p_max;
  double sum_p_low;   // (n - sqrt(n^{1-delta} log n)) / 2
  double sum_p_high;  // (n + sqrt(n^{1-delta} log n)) / 2
};

// Smallest admissible eps for n possible edges: 3.166 / sqrt(n).
double ie_bound_min_eps(double n);

// Requires eps > 3.166 / sqrt(n) and delta > 0.
IeSelectionBound ie_selection_lower_bound(double n, double eps, double delta);

}  // namespace occam

#endif  // OCCAM_EVIDENCE_ER_IE_HPP_
