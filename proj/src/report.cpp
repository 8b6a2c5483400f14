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

#include "occam/report.hpp"

#include <algorithm>
#include <cmath>

#include "occam/errors.hpp"

namespace occam {

namespace {

nlohmann::json number_or_null(double v) {
  return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
}

}  // namespace

nlohmann::json report_to_json(const EvidenceReport& r) {
  nlohmann::json j;
  j["model"] = r.model.label();
  j["kind"] = to_string(r.model.kind);
  j["K"] = r.model.kind == ModelKind::kSBM ? nlohmann::json(r.model.K) : nlohmann::json(nullptr);
  j["log_evidence"] = r.ok() ? number_or_null(r.log_evidence) : nlohmann::json(nullptr);
  j["method"] = r.ok() ? nlohmann::json(to_string(r.method)) : nlohmann::json(nullptr);
  if (r.map_point) {
    nlohmann::json m = nlohmann::json::array();
    for (Eigen::Index i = 0; i < r.map_point->size(); ++i) m.push_back(number_or_null((*r.map_point)(i)));
    j["map_point"] = m;
  } else {
    j["map_point"] = nullptr;
  }
  if (r.membership_used) {
    nlohmann::json m = nlohmann::json::array();
    for (int label : r.membership_used->labels()) m.push_back(label + 1);
    j["membership"] = m;
  } else {
    j["membership"] = nullptr;
  }
  if (r.membership_log_prior) j["membership_log_prior"] = *r.membership_log_prior;
  j["warnings"] = r.warnings;
  j["unmatched"] = r.unmatched;
  j["diagnostics"] = {{"converged", r.diagnostics.converged},
                      {"boundary", r.diagnostics.boundary},
                      {"iterations", r.diagnostics.iterations}};
  if (!r.diagnostics.fallback_reason.empty()) {
    j["diagnostics"]["fallback_reason"] = r.diagnostics.fallback_reason;
  }
  if (!r.ok()) j["error"] = r.error;
  return j;
}

nlohmann::json selection_to_json(const std::string& source, const SelectionResult& s) {
  nlohmann::json reports = nlohmann::json::array();
  for (const EvidenceReport& r : s.reports) reports.push_back(report_to_json(r));
  return {{"source", source}, {"winner", s.best().model.label()}, {"reports", reports}};
}

FiveNumber five_number_summary(std::vector<double> v) {
  if (v.empty()) throw DomainError("five_number_summary: no values");
  std::sort(v.begin(), v.end());
  auto q = [&](double p) {
    const double h = (static_cast<double>(v.size()) - 1.0) * p;
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const std::size_t hi = std::min(lo + 1, v.size() - 1);
    return v[lo] + (h - static_cast<double>(lo)) * (v[hi] - v[lo]);
  };
  return {v.front(), q(0.25), q(0.5), q(0.75), v.back()};
}

}  // namespace occam
