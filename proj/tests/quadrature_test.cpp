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

#include "occam/quadrature.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "occam/errors.hpp"

namespace occam {
namespace {

TEST(LogIntegrate, Polynomial) {
  const double v = log_integrate([](double t) { return 3.0 * std::log(t); }, 0.0, 1.0);
  EXPECT_NEAR(v, std::log(0.25), 1e-13);
}

TEST(LogIntegrate, GaussianBelowDoubleRange) {
  // exp(-1e5) * integral of exp(-(t - 0.5)^2 / (2 s^2)) over [0, 1].
  const double s = 0.01;
  auto f = [s](double t) { return -1e5 - (t - 0.5) * (t - 0.5) / (2 * s * s); };
  const double expect = -1e5 + std::log(s * std::sqrt(2 * std::numbers::pi));
  EXPECT_NEAR(log_integrate(f, 0.0, 1.0), expect, 1e-9);
}

TEST(LogIntegrate, EndpointSingularity) {
  // integral of t^(-1/2) over (0, 1) is 2.
  const double v = log_integrate([](double t) { return -0.5 * std::log(t); }, 0.0, 1.0,
                                 {.initial_panels = 32, .rel_tol = 1e-10, .max_panels = 20000});
  EXPECT_NEAR(v, std::log(2.0), 1e-6);
}

TEST(LogIntegrate, ZeroIntegrandAndBadInterval) {
  EXPECT_EQ(log_integrate([](double) { return -std::numeric_limits<double>::infinity(); }, 0.0, 1.0),
            -std::numeric_limits<double>::infinity());
  EXPECT_THROW(log_integrate([](double) { return 0.0; }, 1.0, 1.0), DomainError);
}

}  // namespace
}  // namespace occam
