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

#include "occam/evidence_er_ie.hpp"

#include <algorithm>
#include <cmath>

#include "occam/errors.hpp"
#include "occam/special.hpp"

namespace occam {

namespace {

// Constant of the Berry-Esseen type bound for Poisson-binomial sums, doubled.
constexpr double kBandConstant = 1.5830;

void check_summary(const EdgeSummary& es) {
  if (es.n < 0 || es.s < 0 || es.s > es.n) throw DomainError("EdgeSummary: need 0 <= s <= n");
}

}  // namespace

BetaParams matched_ie_prior(std::int64_t n) {
  if (n < 1) throw DomainError("matched_ie_prior: n must be positive");
  const double a = 1.0 / static_cast<double>(n);
  return BetaParams(a, a);
}

double log_evidence_er(const EdgeSummary& es, const BetaParams& prior) {
  check_summary(es);
  const double s = static_cast<double>(es.s);
  const double f = static_cast<double>(es.n - es.s);
  return log_beta(prior.alpha + s, prior.beta + f) - log_beta(prior.alpha, prior.beta);
}

double map_er(const EdgeSummary& es, const BetaParams& prior) {
  check_summary(es);
  const double denom = prior.alpha + prior.beta + static_cast<double>(es.n) - 2.0;
  if (!(denom > 0.0)) throw DomainError("map_er: posterior mode undefined");
  return std::clamp((prior.alpha + static_cast<double>(es.s) - 1.0) / denom, 0.0, 1.0);
}

double log_evidence_er_at(const EdgeSummary& es, const BetaParams& prior, double p) {
  check_summary(es);
  if (!(p > 0.0 && p < 1.0)) throw BoundaryError("log_evidence_er_at: p must be interior");
  const double s = static_cast<double>(es.s);
  const double f = static_cast<double>(es.n - es.s);
  const double loglik = s * std::log(p) + f * std::log1p(-p);
  const BetaParams post(prior.alpha + s, prior.beta + f);
  return loglik - post.log_density(p) + prior.log_density(p);
}

std::optional<double> log_evidence_er_via_map(const EdgeSummary& es, const BetaParams& prior) {
  const double p = map_er(es, prior);
  if (!(p > 0.0 && p < 1.0)) return std::nullopt;
  return log_evidence_er_at(es, prior, p);
}

double log_evidence_ie(std::span<const std::uint8_t> a, std::span<const BetaParams> priors) {
  if (a.size() != priors.size()) {
    throw DomainError("log_evidence_ie: indicator and prior lengths differ");
  }
  NeumaierSum acc;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const BetaParams& b = priors[i];
    acc.add(std::log((a[i] ? b.alpha : b.beta) / (b.alpha + b.beta)));
  }
  return acc.value();
}

double log_evidence_ie(const EdgeSummary& es, const BetaParams& prior) {
  check_summary(es);
  const double total = prior.alpha + prior.beta;
  return static_cast<double>(es.s) * std::log(prior.alpha / total) +
         static_cast<double>(es.n - es.s) * std::log(prior.beta / total);
}

double log_bayes_factor_ie_er(const EdgeSummary& es, double lambda) {
  check_summary(es);
  if (!(lambda > 0.0 && lambda < 1.0)) {
    throw DomainError("log_bayes_factor_ie_er: lambda must lie in (0, 1)");
  }
  const double n = static_cast<double>(es.n);
  const double s = static_cast<double>(es.s);
  return s * std::log(lambda) + (n - s) * std::log1p(-lambda) + std::log(n + 1.0) +
         log_binomial(n, s);
}

double bic_ie(std::int64_t n_v, bool loops_allowed) {
  if (n_v < 1) throw DomainError("bic_ie: n_v must be positive");
  const double n = static_cast<double>(pair_count(n_v, loops_allowed));
  return -0.5 * n * std::log(static_cast<double>(n_v));
}

double ie_bound_min_eps(double n) { return 2.0 * kBandConstant / std::sqrt(n); }

IeSelectionBound ie_selection_lower_bound(double n, double eps, double delta) {
  if (!(n > 1.0)) throw DomainError("ie_selection_lower_bound: need n > 1");
  if (!(eps > ie_bound_min_eps(n))) {
    throw DomainError("ie_selection_lower_bound: eps must exceed 3.166 / sqrt(n)");
  }
  if (!(delta > 0.0)) throw DomainError("ie_selection_lower_bound: delta must be positive");
  const double log_n = std::log(n);
  const double shrink = 1.0 - std::pow(n, -0.5 * delta);
  const double z = shrink * std::sqrt(log_n);
  IeSelectionBound b{};
  b.value = 2.0 * normal_cdf(z) - 1.0 - eps;
  b.p_min = kBandConstant / (eps * std::sqrt(n));
  b.p_max = 1.0 - b.p_min;
  const double half_width = std::sqrt(std::pow(n, 1.0 - delta) * log_n);
  b.sum_p_low = 0.5 * (n - half_width);
  b.sum_p_high = 0.5 * (n + half_width);
  return b;
}

}  // namespace occam
