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

#ifndef OCCAM_BETA_HPP_
#define OCCAM_BETA_HPP_

#include <cmath>

#include "occam/errors.hpp"
#include "occam/special.hpp"

namespace occam {

// Shape pair of a beta prior or posterior.
struct BetaParams {
  double alpha;
  double beta;

  BetaParams(double a, double b) : alpha(a), beta(b) {
    if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
      throw DomainError("BetaParams: shapes must be positive and finite");
    }
  }

  double mean() const { return alpha / (alpha + beta); }

  // Density on p in (0, 1); -inf outside.
  double log_density(double p) const {
    if (!(p > 0.0 && p < 1.0)) return kNegInf;
    return (alpha - 1.0) * std::log(p) + (beta - 1.0) * std::log1p(-p) - log_beta(alpha, beta);
  }

  bool operator==(const BetaParams&) const = default;
};

}  // namespace occam

#endif  // OCCAM_BETA_HPP_
