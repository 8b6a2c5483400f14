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

#ifndef OCCAM_QUADRATURE_HPP_
#define OCCAM_QUADRATURE_HPP_

#include <functional>

namespace occam {

struct QuadratureOptions {
  int initial_panels = 32;
  double rel_tol = 1e-11;
  int max_panels = 2000;
};

// log of the integral of exp(log_f(t)) over [a, b], by adaptive 15-point
// Gauss-Kronrod in log space. Panel sums are combined with log-sum-exp so
// integrands far below the double range (exp(-1e5)) are handled. The
// integrand is never evaluated at the endpoints.
double log_integrate(const std::function<double(double)>& log_f, double a, double b,
                     const QuadratureOptions& opts = {});

}  // namespace occam

#endif  // OCCAM_QUADRATURE_HPP_
