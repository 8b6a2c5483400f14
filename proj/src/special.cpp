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

#include "occam/special.hpp"

#include <algorithm>
#include <cmath>

#include "occam/errors.hpp"

namespace occam {

double log_gamma(double x) {
#if defined(__GLIBC__)
  int sign = 0;
  return ::lgamma_r(x, &sign);
#else
  return std::lgamma(x);
#endif
}

double log_beta(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw DomainError("log_beta: shapes must be positive");
  }
  return log_gamma(a) + log_gamma(b) - log_gamma(a + b);
}

double log_binomial(double n, double k) {
  if (k < 0.0 || k > n) throw DomainError("log_binomial: k outside [0, n]");
  return log_gamma(n + 1.0) - log_gamma(k + 1.0) - log_gamma(n - k + 1.0);
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

double log_add_exp(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const double hi = std::max(a, b);
  return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

double log_sum_exp(std::span<const double> values) {
  if (values.empty()) return kNegInf;
  const double hi = *std::max_element(values.begin(), values.end());
  if (hi == kNegInf || !std::isfinite(hi)) return hi;
  double acc = 0.0;
  for (double v : values) acc += std::exp(v - hi);
  return hi + std::log(acc);
}

}  // namespace occam
