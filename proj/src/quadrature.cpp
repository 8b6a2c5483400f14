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

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <vector>

#include "occam/errors.hpp"
#include "occam/special.hpp"

namespace occam {

namespace {

// 15-point Kronrod nodes on [-1, 1] (non-negative half) and weights; the
// 7-point Gauss rule uses the odd-indexed nodes.
constexpr std::array<double, 8> kXk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  double log_k;    // Kronrod estimate
  double log_err;  // log |K - G|
};

Panel evaluate(const std::function<double(double)>& log_f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  std::array<double, 15> fk{};
  std::array<double, 7> fg{};
  int ig = 0;
  for (int i = 0; i < 7; ++i) {
    const double lw = std::log(kWk[static_cast<std::size_t>(i)]);
    const double lo = log_f(c - h * kXk[static_cast<std::size_t>(i)]);
    const double hi = log_f(c + h * kXk[static_cast<std::size_t>(i)]);
    fk[static_cast<std::size_t>(2 * i)] = lw + lo;
    fk[static_cast<std::size_t>(2 * i + 1)] = lw + hi;
    if (i % 2 == 1) {
      const double lg = std::log(kWg[static_cast<std::size_t>(i / 2)]);
      fg[static_cast<std::size_t>(ig++)] = lg + lo;
      fg[static_cast<std::size_t>(ig++)] = lg + hi;
    }
  }
  const double mid = log_f(c);
  fk[14] = std::log(kWk[7]) + mid;
  fg[6] = std::log(kWg[3]) + mid;
  const double log_h = std::log(h);
  Panel p{a, b, log_sum_exp(fk) + log_h, kNegInf};
  const double log_g = log_sum_exp(fg) + log_h;
  if (p.log_k == kNegInf && log_g == kNegInf) return p;
  if (std::isnan(p.log_k) || std::isnan(log_g)) throw NumericError("log_integrate: NaN integrand");
  // |K - G| = exp(hi) * (1 - exp(lo - hi))
  const double hi = std::max(p.log_k, log_g);
  const double lo = std::min(p.log_k, log_g);
  p.log_err = lo == hi ? kNegInf : hi + std::log(-std::expm1(lo - hi));
  return p;
}

struct ByError {
  bool operator()(const Panel& x, const Panel& y) const { return x.log_err < y.log_err; }
};

}  // namespace

double log_integrate(const std::function<double(double)>& log_f, double a, double b,
                     const QuadratureOptions& opts) {
  if (!(b > a)) throw DomainError("log_integrate: need a < b");
  std::priority_queue<Panel, std::vector<Panel>, ByError> queue;
  std::vector<Panel> done;
  const int n0 = std::max(1, opts.initial_panels);
  for (int i = 0; i < n0; ++i) {
    const double lo = a + (b - a) * i / n0;
    const double hi = i + 1 == n0 ? b : a + (b - a) * (i + 1) / n0;
    queue.push(evaluate(log_f, lo, hi));
  }

  auto totals = [&](double& log_total, double& log_err) {
    std::vector<double> ks, es;
    ks.reserve(queue.size() + done.size());
    auto q = queue;
    while (!q.empty()) {
      ks.push_back(q.top().log_k);
      es.push_back(q.top().log_err);
      q.pop();
    }
    for (const Panel& p : done) ks.push_back(p.log_k);
    log_total = log_sum_exp(ks);
    log_err = log_sum_exp(es);
  };

  double log_total = 0.0, log_err = 0.0;
  totals(log_total, log_err);
  const double log_tol = std::log(opts.rel_tol);
  int panels = n0;
  while (!queue.empty() && log_total != kNegInf && log_err - log_total > log_tol &&
         panels < opts.max_panels) {
    // Refine the worst panels in a batch, then re-total.
    const int batch = std::max(1, static_cast<int>(queue.size()) / 4);
    for (int i = 0; i < batch && !queue.empty(); ++i) {
      const Panel p = queue.top();
      if (p.log_err - log_total <= log_tol - 10.0) break;
      queue.pop();
      const double mid = 0.5 * (p.a + p.b);
      queue.push(evaluate(log_f, p.a, mid));
      queue.push(evaluate(log_f, mid, p.b));
      ++panels;
    }
    // Panels with negligible error are retired from the queue.
    std::vector<Panel> keep;
    while (!queue.empty()) {
      Panel p = queue.top();
      queue.pop();
      if (p.log_err - log_total < log_tol - 20.0) {
        done.push_back(p);
      } else {
        keep.push_back(p);
      }
    }
    for (Panel& p : keep) queue.push(std::move(p));
    totals(log_total, log_err);
  }
  return log_total;
}

}  // namespace occam
