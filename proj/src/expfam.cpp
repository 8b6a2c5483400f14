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

#include "occam/expfam.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Cholesky>
#include <Eigen/LU>
#include <Eigen/SVD>

#include "occam/errors.hpp"
#include "occam/special.hpp"

namespace occam {

namespace {

constexpr double kStatTol = 1e-12;

void require_normalizer(const ExpFamilyModel& model) {
  if (!model.log_normalizer) {
    throw UnsupportedError(model.name + ": no analytic conjugate normalizer");
  }
}

void require_interior(const ExpFamilyModel& model, const Eigen::VectorXd& target) {
  if (model.support_interior && !model.support_interior(target)) {
    throw BoundaryError(model.name + ": mean statistic on the boundary of the support");
  }
}

Eigen::VectorXd newton_1d(const ExpFamilyModel& model, double target) {
  auto grad = [&](double t) { return model.log_partition_grad(Eigen::VectorXd::Constant(1, t))(0); };
  auto hess = [&](double t) { return model.log_partition_hess(Eigen::VectorXd::Constant(1, t))(0, 0); };

  double lo = -1.0, hi = 1.0;
  for (int i = 0; grad(lo) > target; ++i) {
    if (i > 60) throw BoundaryError(model.name + ": cannot bracket inverse gradient");
    lo *= 2.0;
  }
  for (int i = 0; grad(hi) < target; ++i) {
    if (i > 60) throw BoundaryError(model.name + ": cannot bracket inverse gradient");
    hi *= 2.0;
  }

  double t = 0.5 * (lo + hi);
  bool polished = false;
  for (int it = 0; it < 200; ++it) {
    const double r = grad(t) - target;
    if (r == 0.0) break;
    if (r > 0) {
      hi = t;
    } else {
      lo = t;
    }
    const double h = hess(t);
    double next = h > 0 ? t - r / h : 0.5 * (lo + hi);
    if (!(next >= lo && next <= hi)) next = 0.5 * (lo + hi);
    const double step = next - t;
    t = next;
    // One extra Newton step after reaching tolerance squares the error.
    if (std::abs(r) <= kStatTol * std::max(1.0, std::abs(target))) {
      if (polished) break;
      polished = true;
    }
    if (std::abs(step) <= 4 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(t))) {
      break;
    }
  }
  return Eigen::VectorXd::Constant(1, t);
}

Eigen::VectorXd newton_nd(const ExpFamilyModel& model, const Eigen::VectorXd& target) {
  auto potential = [&](const Eigen::VectorXd& th) {
    return model.log_partition(th) - target.dot(th);
  };
  Eigen::VectorXd theta = Eigen::VectorXd::Zero(target.size());
  bool polished = false;
  for (int it = 0; it < 500; ++it) {
    const Eigen::VectorXd r = model.log_partition_grad(theta) - target;
    const double rnorm = r.lpNorm<Eigen::Infinity>();
    if (rnorm == 0.0) break;
    const Eigen::LDLT<Eigen::MatrixXd> ldlt(model.log_partition_hess(theta));
    if (ldlt.info() != Eigen::Success) throw NumericError(model.name + ": singular Hessian");
    const Eigen::VectorXd step = -ldlt.solve(r);
    const double f0 = potential(theta);
    const double slope = r.dot(step);
    double t = 1.0;
    Eigen::VectorXd next = theta + step;
    while (potential(next) > f0 + 1e-4 * t * slope && t > 1e-12) {
      t *= 0.5;
      next = theta + t * step;
    }
    theta = next;
    if (rnorm <= kStatTol * std::max(1.0, target.lpNorm<Eigen::Infinity>())) {
      if (polished) break;
      polished = true;
    }
  }
  return theta;
}

}  // namespace

ExpFamilyModel bernoulli_family(int k) {
  if (k < 1) throw DomainError("bernoulli_family: rank must be positive");
  ExpFamilyModel m;
  m.name = "bernoulli^" + std::to_string(k);
  m.rank = k;
  m.log_partition = [](const Eigen::VectorXd& th) {
    NeumaierSum acc;
    for (Eigen::Index i = 0; i < th.size(); ++i) acc.add(softplus(th(i)));
    return acc.value();
  };
  m.log_partition_grad = [](const Eigen::VectorXd& th) {
    return th.unaryExpr([](double t) { return sigmoid(t); }).eval();
  };
  m.log_partition_hess = [](const Eigen::VectorXd& th) {
    const Eigen::VectorXd d = th.unaryExpr([](double t) {
      const double p = sigmoid(t);
      return p * (1.0 - p);
    });
    return Eigen::MatrixXd(d.asDiagonal());
  };
  m.grad_inverse = [](const Eigen::VectorXd& mu) {
    return mu.unaryExpr([](double p) { return logit(p); }).eval();
  };
  m.log_normalizer = [](const Eigen::VectorXd& tau, double mm) {
    NeumaierSum acc;
    for (Eigen::Index i = 0; i < tau.size(); ++i) acc.add(-log_beta(tau(i), mm - tau(i)));
    return acc.value();
  };
  m.support_interior = [](const Eigen::VectorXd& mu) {
    return (mu.array() > 0.0).all() && (mu.array() < 1.0).all();
  };
  return m;
}

SufficientData bernoulli_counts(double n, double s) {
  if (n < 0 || s < 0 || s > n) throw DomainError("bernoulli_counts: need 0 <= s <= n");
  return SufficientData{Eigen::VectorXd::Constant(1, s), n, 0.0};
}

ConjugateHyper posterior_update(const ConjugateHyper& h, const Eigen::VectorXd& T_sum, double n) {
  if (n < 0) throw DomainError("posterior_update: negative observation count");
  if (T_sum.size() != h.tau.size()) throw DomainError("posterior_update: dimension mismatch");
  return ConjugateHyper{h.tau + T_sum, h.m + n};
}

double log_likelihood(const ExpFamilyModel& model, const SufficientData& data,
                      const Eigen::VectorXd& theta) {
  return data.log_base_measure + theta.dot(data.T_sum) - data.n * model.log_partition(theta);
}

double log_prior_density(const ExpFamilyModel& model, const ConjugateHyper& h,
                         const Eigen::VectorXd& theta) {
  require_normalizer(model);
  return model.log_normalizer(h.tau, h.m) + h.tau.dot(theta) - h.m * model.log_partition(theta);
}

double log_evidence(const ExpFamilyModel& model, const ConjugateHyper& h,
                    const SufficientData& data) {
  require_normalizer(model);
  if (data.n == 0) return 0.0;
  const ConjugateHyper post = posterior_update(h, data.T_sum, data.n);
  return data.log_base_measure + model.log_normalizer(h.tau, h.m) -
         model.log_normalizer(post.tau, post.m);
}

double flexibility(const ExpFamilyModel& model, const ConjugateHyper& h,
                   const SufficientData& data, const Eigen::VectorXd& theta) {
  require_normalizer(model);
  const ConjugateHyper post = posterior_update(h, data.T_sum, data.n);
  return model.log_normalizer(post.tau, post.m) - model.log_normalizer(h.tau, h.m) +
         theta.dot(data.T_sum) - data.n * model.log_partition(theta);
}

Eigen::VectorXd mean_to_canonical(const ExpFamilyModel& model, const Eigen::VectorXd& target) {
  require_interior(model, target);
  if (model.grad_inverse) return model.grad_inverse(target);
  return newton_inverse_gradient(model, target);
}

Eigen::VectorXd newton_inverse_gradient(const ExpFamilyModel& model,
                                        const Eigen::VectorXd& target) {
  require_interior(model, target);
  return target.size() == 1 ? newton_1d(model, target(0)) : newton_nd(model, target);
}

Eigen::VectorXd map_estimate(const ExpFamilyModel& model, const ConjugateHyper& h,
                             const SufficientData& data) {
  const ConjugateHyper post = posterior_update(h, data.T_sum, data.n);
  return mean_to_canonical(model, post.tau / post.m);
}

double prior_corrected_bic(const ExpFamilyModel& model, const ConjugateHyper& h,
                           const SufficientData& data) {
  const Eigen::VectorXd theta = map_estimate(model, h, data);
  return log_likelihood(model, data, theta) + log_prior_density(model, h, theta) -
         0.5 * model.rank * std::log(data.n);
}

double bic_plain(const ExpFamilyModel& model, const SufficientData& data) {
  if (!(data.n > 0)) throw DomainError("bic_plain: need at least one observation");
  const Eigen::VectorXd theta = mean_to_canonical(model, data.T_sum / data.n);
  return log_likelihood(model, data, theta) - 0.5 * model.rank * std::log(data.n);
}

double kashyap_penalty(const ExpFamilyModel& model, const ConjugateHyper& h,
                       const Eigen::VectorXd& theta_hat, double n) {
  const Eigen::MatrixXd scaled = model.log_partition_hess(theta_hat) / (2.0 * M_PI);
  const Eigen::LLT<Eigen::MatrixXd> llt(scaled);
  if (llt.info() != Eigen::Success) {
    throw NumericError(model.name + ": Hessian of the log-partition is singular");
  }
  const double log_det = 2.0 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
  return 0.5 * model.rank * std::log(n) - log_prior_density(model, h, theta_hat) + 0.5 * log_det;
}

double bic_flexibility_gap(const ExpFamilyModel& model, const ConjugateHyper& h,
                           const SufficientData& data) {
  const Eigen::VectorXd theta = map_estimate(model, h, data);
  return flexibility(model, h, data, theta) - 0.5 * model.rank * std::log(data.n);
}

double flat_prior_log_evidence(const ExpFamilyModel& model, const SufficientData& data) {
  require_normalizer(model);
  if (!(data.n > 0) || (model.support_interior && !model.support_interior(data.T_sum / data.n))) {
    throw DomainError(model.name + ": flat-prior evidence undefined on the support boundary");
  }
  return data.log_base_measure - model.log_normalizer(data.T_sum, data.n);
}

NestingMap::NestingMap(Eigen::MatrixXd M) : M_(std::move(M)) {
  if (M_.rows() < 1 || M_.rows() > M_.cols()) {
    throw DomainError("NestingMap: M must be l x k with 1 <= l <= k");
  }
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(M_);
  const auto& sv = svd.singularValues();
  if (!(sv(sv.size() - 1) > 1e-10 * sv(0))) {
    throw DomainError("NestingMap: M is not of full row rank");
  }
}

Eigen::MatrixXd NestingMap::pseudo_inverse() const {
  const Eigen::MatrixXd gram = M_ * M_.transpose();
  const Eigen::FullPivLU<Eigen::MatrixXd> lu(gram);
  if (!lu.isInvertible()) throw NumericError("NestingMap: M M^T is singular");
  return M_.transpose() * lu.inverse();
}

NestedHyper match_down(const ConjugateHyper& h, const NestingMap& M) {
  if (h.tau.size() != M.matrix().cols()) throw DomainError("match_down: dimension mismatch");
  return NestedHyper{M.matrix() * h.tau, h.m};
}

ConjugateHyper match_up(const Eigen::VectorXd& upsilon, double w, const NestingMap& M) {
  if (upsilon.size() != M.matrix().rows()) throw DomainError("match_up: dimension mismatch");
  return ConjugateHyper{M.pseudo_inverse() * upsilon, w};
}

std::vector<BetaParams> bernoulli_hyper_to_beta(const ConjugateHyper& h) {
  std::vector<BetaParams> out;
  out.reserve(static_cast<std::size_t>(h.tau.size()));
  for (Eigen::Index i = 0; i < h.tau.size(); ++i) out.emplace_back(h.tau(i), h.m - h.tau(i));
  return out;
}

BetaParams er_beta_from_nested(const NestedHyper& nested, double n_edges) {
  if (nested.upsilon.size() != 1) throw DomainError("er_beta_from_nested: ER is rank one");
  return BetaParams(nested.upsilon(0), n_edges * nested.w - nested.upsilon(0));
}

NestedHyper nested_from_er_beta(const BetaParams& prior, double n_edges) {
  return NestedHyper{Eigen::VectorXd::Constant(1, prior.alpha),
                     (prior.alpha + prior.beta) / n_edges};
}

}  // namespace occam
