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

#ifndef OCCAM_EXPFAM_HPP_
#define OCCAM_EXPFAM_HPP_

#include <functional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "occam/beta.hpp"

namespace occam {

// A canonical k-parameter exponential family
//   f(x | theta) = h(x) exp(<theta, T(x)> - A(theta)).
// Only the pieces needed for conjugate analysis are represented; the data
// enter through their sufficient summary (see SufficientData).
struct ExpFamilyModel {
  std::string name;
  int rank = 1;
  std::function<double(const Eigen::VectorXd&)> log_partition;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> log_partition_grad;
  std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> log_partition_hess;
  // Closed-form inverse of the gradient map, if known.
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> grad_inverse;
  // log H(tau, m), the log normalizer of the conjugate prior, if known.
  std::function<double(const Eigen::VectorXd&, double)> log_normalizer;
  // True iff a mean statistic is interior to the convex support of T(X).
  std::function<bool(const Eigen::VectorXd&)> support_interior;
};

// Conjugate prior rho(theta) = H(tau, m) exp(<tau, theta> - m A(theta)).
struct ConjugateHyper {
  Eigen::VectorXd tau;
  double m = 1.0;
};

// Sufficient summary of n i.i.d. observations.
struct SufficientData {
  Eigen::VectorXd T_sum;
  double n = 0.0;
  double log_base_measure = 0.0;  // sum_i log h(x_i)
};

// Product of k independent Bernoulli coordinates in logit parameterization:
// A(theta) = sum log(1 + e^theta_i), H(tau, m)^-1 = prod B(tau_i, m - tau_i).
ExpFamilyModel bernoulli_family(int k);

// n Bernoulli trials with s successes, as data for bernoulli_family(1).
SufficientData bernoulli_counts(double n, double s);

ConjugateHyper posterior_update(const ConjugateHyper& h, const Eigen::VectorXd& T_sum, double n);

double log_likelihood(const ExpFamilyModel& model, const SufficientData& data,
                      const Eigen::VectorXd& theta);

// Conjugate prior log-density in canonical (theta) coordinates.
double log_prior_density(const ExpFamilyModel& model, const ConjugateHyper& h,
                         const Eigen::VectorXd& theta);

double log_evidence(const ExpFamilyModel& model, const ConjugateHyper& h,
                    const SufficientData& data);

// log posterior/prior density ratio at theta. For every theta,
// log_evidence == log_likelihood(theta) - flexibility(theta).
double flexibility(const ExpFamilyModel& model, const ConjugateHyper& h,
                   const SufficientData& data, const Eigen::VectorXd& theta);

// Solves grad A(theta) = target. Uses the closed form when the model has
// one, otherwise newton_inverse_gradient. Throws BoundaryError when the
// target is not interior to the support.
Eigen::VectorXd mean_to_canonical(const ExpFamilyModel& model, const Eigen::VectorXd& target);

// Safeguarded Newton solve of grad A(theta) = target. In one dimension
// steps leaving the current bracket fall back to bisection; in higher
// dimension Newton steps are damped by backtracking on the convex
// potential A(theta) - <target, theta>.
Eigen::VectorXd newton_inverse_gradient(const ExpFamilyModel& model,
                                        const Eigen::VectorXd& target);

Eigen::VectorXd map_estimate(const ExpFamilyModel& model, const ConjugateHyper& h,
                             const SufficientData& data);

// log L(theta_hat) + log rho(theta_hat) - (k/2) log n at the MAP.
double prior_corrected_bic(const ExpFamilyModel& model, const ConjugateHyper& h,
                           const SufficientData& data);

// log L(theta_mle) - (k/2) log n.
double bic_plain(const ExpFamilyModel& model, const SufficientData& data);

// (k/2) log n - log rho(theta_hat) + (1/2) log |Hess A(theta_hat) / (2 pi)|.
// Flexibility at the MAP minus this penalty vanishes as n grows.
double kashyap_penalty(const ExpFamilyModel& model, const ConjugateHyper& h,
                       const Eigen::VectorXd& theta_hat, double n);

// flexibility(theta_hat) - (k/2) log n.
double bic_flexibility_gap(const ExpFamilyModel& model, const ConjugateHyper& h,
                           const SufficientData& data);

// Evidence under the flat improper prior on theta: prod h / H(T_sum, n).
double flat_prior_log_evidence(const ExpFamilyModel& model, const SufficientData& data);

// Linear nesting theta = M^T eta with M of full row rank l < k (l == k is
// accepted for the identity case).
class NestingMap {
 public:
  explicit NestingMap(Eigen::MatrixXd M);

  const Eigen::MatrixXd& matrix() const { return M_; }
  // Right pseudo-inverse M^T (M M^T)^-1.
  Eigen::MatrixXd pseudo_inverse() const;

 private:
  Eigen::MatrixXd M_;
};

struct NestedHyper {
  Eigen::VectorXd upsilon;
  double w = 1.0;
};

// Closest nested prior to a full prior: (M tau, m).
NestedHyper match_down(const ConjugateHyper& h, const NestingMap& M);

// Closest full prior to a nested prior: (M^+ upsilon, w).
ConjugateHyper match_up(const Eigen::VectorXd& upsilon, double w, const NestingMap& M);

// Beta shapes implied by a Bernoulli-family conjugate hyper, coordinate-wise:
// Beta(tau_i, m - tau_i).
std::vector<BetaParams> bernoulli_hyper_to_beta(const ConjugateHyper& h);

// ER prior implied by a nested hyper under the per-graph log-partition
// n_edges * log(1 + e^eta): Beta(upsilon, n_edges * w - upsilon).
BetaParams er_beta_from_nested(const NestedHyper& nested, double n_edges);

// Per-graph nested hyper from an ER Beta(alpha, beta) prior:
// upsilon = alpha, w = (alpha + beta) / n_edges.
NestedHyper nested_from_er_beta(const BetaParams& prior, double n_edges);

}  // namespace occam

#endif  // OCCAM_EXPFAM_HPP_
