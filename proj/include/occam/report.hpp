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

#ifndef OCCAM_REPORT_HPP_
#define OCCAM_REPORT_HPP_

#include <string>
#include <vector>

#include <json.hpp>

#include "occam/selection.hpp"

namespace occam {

// {model, K, log_evidence, method, map_point, membership, warnings} plus
// kind, unmatched, diagnostics and error. Membership labels are 1-based;
// non-finite evidences are written as null.
nlohmann::json report_to_json(const EvidenceReport& r);

// {source, winner, reports: [...]}.
nlohmann::json selection_to_json(const std::string& source, const SelectionResult& s);

// min, Q1, median, Q3, max with linear interpolation between order
// statistics (position (n - 1) q). Throws DomainError on empty input.
struct FiveNumber {
  double min, q1, median, q3, max;
};
FiveNumber five_number_summary(std::vector<double> values);

}  // namespace occam

#endif  // OCCAM_REPORT_HPP_
