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

#ifndef OCCAM_CONFIG_HPP_
#define OCCAM_CONFIG_HPP_

#include <cstdint>
#include <istream>
#include <string>
#include <vector>

namespace occam {

// Settings of a Monte Carlo experiment, read from flat `key = value` text.
// Lists are comma separated; `start:stop:step` expands to an inclusive grid.
//
//   n_v = 50, 150, 250, 500
//   p = 0.30:0.70:0.01
//   reps = 300
struct SweepConfig {
  std::string experiment;                  // optional; the CLI argument wins
  std::vector<std::int64_t> n_v{50, 150, 250, 500};
  std::vector<double> p{};                 // defaults to 0.30:0.70:0.01
  std::vector<double> x1{};                // defaults to 0.05:0.95:0.05
  std::vector<double> x2{};                // defaults to x1
  std::vector<double> eps{};               // defaults to 0.01:0.99:0.01
  std::vector<double> delta{};             // defaults to 0.01:0.99:0.01
  int reps = 100;
  int outer_reps = 100;                    // ie_histogram: random P matrices
  int inner_reps = 1000;                   // ie_histogram: graphs per P
  std::vector<int> k{2};                   // SBM candidates
  bool membership_prior = false;           // charge estimated memberships
  bool loops = true;
  std::uint64_t seed = 1;
  int threads = 1;
  std::vector<std::string> files;          // analyze
  std::vector<std::string> membership;     // analyze: NAME=PATH
};

// Parses and validates. Unknown keys, malformed values, empty grids and
// values outside their domain raise ParseError with the line number.
SweepConfig parse_sweep_config(std::istream& in);
SweepConfig load_sweep_config(const std::string& path);

// Inclusive arithmetic grid, values rounded to 12 decimals so that
// 0.30:0.70:0.01 yields exactly 41 tidy points.
std::vector<double> arithmetic_grid(double start, double stop, double step);

}  // namespace occam

#endif  // OCCAM_CONFIG_HPP_
