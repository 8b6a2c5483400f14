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

#ifndef OCCAM_SPECIAL_HPP_
#define OCCAM_SPECIAL_HPP_

#include <cmath>
#include <cstdint>
#include <limits>
#include <span>

namespace occam {

inline constexpr double kLog2Pi = 1.8378770664093454835606594728112;
inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Reentrant log|Gamma(x)|. std::lgamma writes the global signgam on glibc.
double log_gamma(double x);

// log B(a, b) for a, b > 0.
double log_beta(double a, double b);

// log C(n, k) for 0 <= k <= n, via log-gamma.
double log_binomial(double n, double k);

// Standard normal CDF.
double normal_cdf(double z);

// log(exp(a) + exp(b)) without overflow; handles -inf operands.
double log_add_exp(double a, double b);

// log of sum exp(values), -inf for an empty span.
double log_sum_exp(std::span<const double> values);

// Logistic function and its inverse.
inline double sigmoid(double t) {
  return t >= 0 ? 1.0 / (1.0 + std::exp(-t)) : std::exp(t) / (1.0 + std::exp(t));
}
inline double logit(double p) { return std::log(p) - std::log1p(-p); }

// log(1 + e^t), stable for large |t|.
inline double softplus(double t) {
  return t > 0 ? t + std::log1p(std::exp(-t)) : std::log1p(std::exp(t));
}

// Compensated (Neumaier) summation.
class NeumaierSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace occam

#endif  // OCCAM_SPECIAL_HPP_
