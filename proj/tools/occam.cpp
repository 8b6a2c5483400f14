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

// occam: evidence-based model selection for graphs.
//
//   occam select g1.txt g2.csv --k 2,4 --membership hemi=parts/{stem}.txt
//   occam simulate sbm_heatmap --config presets/sbm_heatmap_desk.conf --out heat.csv --seed 7
//   occam bound --nv 100 --out bound.csv
//
// Exit codes: 0 success, 1 usage, 2 data error, 3 numeric failure.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "occam/config.hpp"
#include "occam/errors.hpp"
#include "occam/simulate.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitNumeric = 3;

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw occam::ParseError("cannot write '" + path + "'", 0);
  out << text;
  if (!out) throw occam::ParseError("write failed for '" + path + "'", 0);
}

int run_analyze(const std::vector<std::string>& files, const std::vector<int>& k,
                const std::vector<std::string>& membership, bool drop_loops, bool membership_prior,
                const std::string& json_out, const std::string& summary_out) {
  std::vector<occam::NamedPartition> parts;
  for (const auto& m : membership) parts.push_back(occam::parse_named_partition(m));
  const occam::AnalyzeResult res = occam::analyze(files, k, parts, drop_loops, membership_prior);
  write_text(json_out, res.reports.dump(2) + "\n");
  if (!summary_out.empty()) write_text(summary_out, res.summary.str());
  if (res.failed_files > 0) {
    std::cerr << "occam: " << res.failed_files << " of " << files.size() << " files failed\n";
    return res.numeric_failures == res.failed_files ? kExitNumeric : kExitData;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bayesian evidence model selection for ER, IE and rank-1 SBM graphs"};
  app.require_subcommand(1);

  auto* select = app.add_subcommand("select", "Select a model for each graph file");
  std::vector<std::string> files;
  std::vector<int> k_list{2};
  std::vector<std::string> membership;
  bool no_loops = false;
  bool membership_prior = false;
  std::string select_out = "-";
  std::string summary_out;
  select->add_option("files", files, "Edge-list or dense .csv graph files")->required();
  select->add_option("--k", k_list, "SBM block counts to include")->delimiter(',')
      ->check(CLI::PositiveNumber);
  select->add_option("--membership", membership,
                     "Known partition NAME=PATH or PATH; '{stem}' expands to the graph file stem");
  select->add_flag("--no-loops", no_loops, "Drop self-loops: n = C(n_v, 2)");
  select->add_flag("--membership-prior", membership_prior,
                   "Add the log prior of estimated SBM memberships to their evidence");
  select->add_option("--out", select_out, "JSON report path (default stdout)");
  select->add_option("--summary", summary_out, "CSV five-number summary per model");

  auto* simulate = app.add_subcommand("simulate", "Run a Monte Carlo experiment");
  std::string experiment;
  std::string config_path;
  std::string sim_out;
  std::optional<std::uint64_t> seed;
  std::optional<int> threads;
  simulate->add_option("experiment", experiment,
                       "er_sweep | bayes_factor_sweep | sbm_heatmap | ie_histogram | "
                       "bound_surface | analyze")
      ->required();
  simulate->add_option("--config", config_path, "key = value config file")->required();
  simulate->add_option("--out", sim_out, "Output CSV path")->required();
  simulate->add_option("--seed", seed, "Base seed (overrides the config)");
  simulate->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

  auto* bound = app.add_subcommand("bound", "IE selection lower bound over the (eps, delta) grid");
  std::int64_t nv = 0;
  std::string bound_out;
  bool bound_no_loops = false;
  bound->add_option("--nv", nv, "Number of vertices")->required()->check(CLI::PositiveNumber);
  bound->add_option("--out", bound_out, "Output CSV path")->required();
  bound->add_flag("--no-loops", bound_no_loops, "Use n = C(n_v, 2)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*select) {
      return run_analyze(files, k_list, membership, no_loops, membership_prior, select_out, summary_out);
    }
    if (*simulate) {
      occam::SweepConfig cfg = occam::load_sweep_config(config_path);
      if (seed) cfg.seed = *seed;
      if (threads) cfg.threads = *threads;
      if (experiment == "analyze") {
        if (cfg.files.empty()) {
          std::cerr << "occam: analyze needs 'files' in the config\n";
          return kExitUsage;
        }
        const auto json_path = std::filesystem::path(sim_out).replace_extension(".json").string();
        return run_analyze(cfg.files, cfg.k, cfg.membership, true, cfg.membership_prior, json_path, sim_out);
      }
      write_text(sim_out, occam::run_experiment(experiment, cfg).str());
      return 0;
    }
    if (*bound) {
      occam::SweepConfig cfg;
      cfg.n_v = {nv};
      cfg.loops = !bound_no_loops;
      cfg.eps = occam::arithmetic_grid(0.01, 0.99, 0.01);
      cfg.delta = occam::arithmetic_grid(0.01, 0.99, 0.01);
      write_text(bound_out, occam::run_bound_surface(cfg).str());
      return 0;
    }
  } catch (const occam::UnsupportedError& e) {
    std::cerr << "occam: " << e.what() << "\n";
    return kExitUsage;
  } catch (const occam::NumericError& e) {
    std::cerr << "occam: numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "occam: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}
