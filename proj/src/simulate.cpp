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

#include "occam/simulate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "occam/errors.hpp"
#include "occam/evidence_er_ie.hpp"
#include "occam/graph_io.hpp"
#include "occam/random.hpp"
#include "occam/report.hpp"

namespace occam {

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

struct CellWriter {
  std::ostream& out;
  void operator()(std::monostate) const { out << "null"; }
  void operator()(std::int64_t v) const { out << v; }
  void operator()(double v) const { out << format_real(v); }
  void operator()(const std::string& v) const { out << v; }
};

}  // namespace

void CsvTable::write(std::ostream& out) const {
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      std::visit(CellWriter{out}, row[i]);
    }
    out << '\n';
  }
}

std::string CsvTable::str() const {
  std::ostringstream ss;
  write(ss);
  return ss.str();
}

std::size_t CsvTable::column(const std::string& name) const {
  const auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) throw DomainError("CsvTable: no column '" + name + "'");
  return static_cast<std::size_t>(it - header.begin());
}

void parallel_for(int count, int threads, const std::function<void(int)>& fn) {
  if (count <= 0) return;
  threads = std::clamp(threads, 1, count);
  if (threads == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr first;
  std::mutex mu;
  auto worker = [&] {
    for (int i = next++; i < count && !stop; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!first) first = std::current_exception();
        stop = true;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (first) std::rethrow_exception(first);
}

std::int64_t sample_er_edge_count(std::int64_t n_v, double p, bool loops_allowed,
                                  std::uint64_t seed) {
  if (n_v < 1) throw DomainError("sample_er_edge_count: n_v must be positive");
  if (!(p > 0.0 && p < 1.0)) throw DomainError("sample_er_edge_count: p must lie in (0, 1)");
  Rng rng(seed);
  const std::int64_t n = pair_count(n_v, loops_allowed);
  std::int64_t s = 0;
  for (std::int64_t i = 0; i < n; ++i) s += rng.bernoulli(p) ? 1 : 0;
  return s;
}

Eigen::MatrixXd random_probability_matrix(Eigen::Index n_v, bool loops_allowed, std::uint64_t seed) {
  // Own stream: sample_ie(P, loops, seed) must not reuse these uniforms.
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  Eigen::MatrixXd P = Eigen::MatrixXd::Constant(n_v, n_v, 0.5);
  for (Eigen::Index i = 0; i < n_v; ++i) {
    for (Eigen::Index j = loops_allowed ? i : i + 1; j < n_v; ++j) {
      P(i, j) = P(j, i) = rng.uniform();
    }
  }
  return P;
}

int select_index(const Graph& g, const std::vector<ModelSpec>& candidates) {
  try {
    return static_cast<int>(select_model(g, candidates).winner);
  } catch (const NumericError&) {
    return -1;
  }
}

namespace {

std::vector<std::string> fraction_columns(const std::vector<ModelSpec>& candidates) {
  std::vector<std::string> cols;
  for (const ModelSpec& m : candidates) cols.push_back("frac_" + m.label());
  cols.push_back("failed");
  return cols;
}

// Runs `reps` selections and appends per-candidate fractions and the failure
// count to `row`.
void tally_selections(int reps, int threads, const std::vector<ModelSpec>& candidates,
                      const std::function<Graph(int)>& draw, std::vector<CsvCell>& row) {
  std::vector<int> winner(static_cast<std::size_t>(reps), -1);
  parallel_for(reps, threads, [&](int r) { winner[static_cast<std::size_t>(r)] = select_index(draw(r), candidates); });
  std::vector<std::int64_t> counts(candidates.size(), 0);
  std::int64_t failed = 0;
  for (int w : winner) {
    if (w < 0) {
      ++failed;
    } else {
      ++counts[static_cast<std::size_t>(w)];
    }
  }
  for (std::int64_t c : counts) row.emplace_back(static_cast<double>(c) / reps);
  row.emplace_back(failed);
}

}  // namespace

CsvTable run_bayes_factor_sweep(const SweepConfig& cfg) {
  CsvTable t;
  t.header = {"n_v", "n", "p", "reps", "ie_selected", "fraction"};
  std::uint64_t cell = 0;
  for (std::int64_t n_v : cfg.n_v) {
    const std::int64_t n = pair_count(n_v, cfg.loops);
    for (double p : cfg.p) {
      std::vector<char> ie(static_cast<std::size_t>(cfg.reps), 0);
      parallel_for(cfg.reps, cfg.threads, [&](int r) {
        const std::int64_t s = sample_er_edge_count(n_v, p, cfg.loops, replicate_seed(cfg.seed, cell, static_cast<std::uint64_t>(r)));
        ie[static_cast<std::size_t>(r)] = log_bayes_factor_ie_er({n, s}, 0.5) > 0.0;
      });
      const auto hits = static_cast<std::int64_t>(std::count(ie.begin(), ie.end(), 1));
      t.rows.push_back({n_v, n, p, std::int64_t{cfg.reps}, hits, static_cast<double>(hits) / cfg.reps});
      ++cell;
    }
  }
  return t;
}

CsvTable run_er_sweep(const SweepConfig& cfg) {
  const std::vector<ModelSpec> candidates = default_registry(cfg.k, cfg.membership_prior);
  CsvTable t;
  t.header = {"n_v", "p", "reps"};
  for (auto& c : fraction_columns(candidates)) t.header.push_back(c);
  std::uint64_t cell = 0;
  for (std::int64_t n_v : cfg.n_v) {
    for (double p : cfg.p) {
      std::vector<CsvCell> row{n_v, p, std::int64_t{cfg.reps}};
      tally_selections(cfg.reps, cfg.threads, candidates, [&](int r) {
        return sample_er(n_v, p, cfg.loops, replicate_seed(cfg.seed, cell, static_cast<std::uint64_t>(r)));
      }, row);
      t.rows.push_back(std::move(row));
      ++cell;
    }
  }
  return t;
}

CsvTable run_sbm_heatmap(const SweepConfig& cfg) {
  const std::vector<ModelSpec> candidates = default_registry(cfg.k, cfg.membership_prior);
  CsvTable t;
  t.header = {"n_v", "x1", "x2", "reps"};
  for (auto& c : fraction_columns(candidates)) t.header.push_back(c);
  std::uint64_t cell = 0;
  for (std::int64_t n_v : cfg.n_v) {
    if (n_v < 2) throw DomainError("sbm_heatmap: n_v must be >= 2");
    const BlockAssignment z = BlockAssignment::contiguous(n_v, 2);
    for (double x1 : cfg.x1) {
      for (double x2 : cfg.x2) {
        const Eigen::Vector2d x(x1, x2);
        std::vector<CsvCell> row{n_v, x1, x2, std::int64_t{cfg.reps}};
        tally_selections(cfg.reps, cfg.threads, candidates, [&](int r) {
          return sample_sbm_rank1(x, z, cfg.loops, replicate_seed(cfg.seed, cell, static_cast<std::uint64_t>(r)));
        }, row);
        t.rows.push_back(std::move(row));
        ++cell;
      }
    }
  }
  return t;
}

CsvTable run_ie_histogram(const SweepConfig& cfg) {
  const std::vector<ModelSpec> candidates = default_registry(cfg.k, cfg.membership_prior);
  CsvTable t;
  t.header = {"n_v", "matrix", "inner_reps"};
  for (auto& c : fraction_columns(candidates)) t.header.push_back(c);
  t.header.push_back("rate");
  const std::size_t ie_col = candidates.size() - 1;
  std::uint64_t cell = 0;
  for (std::int64_t n_v : cfg.n_v) {
    for (int m = 0; m < cfg.outer_reps; ++m) {
      // Cell ids alternate: the matrix draw, then its inner replicates.
      const Eigen::MatrixXd P = random_probability_matrix(n_v, cfg.loops, replicate_seed(cfg.seed, cell, 0));
      ++cell;
      std::vector<CsvCell> row{n_v, std::int64_t{m}, std::int64_t{cfg.inner_reps}};
      tally_selections(cfg.inner_reps, cfg.threads, candidates, [&](int r) {
        return sample_ie(P, cfg.loops, replicate_seed(cfg.seed, cell, static_cast<std::uint64_t>(r)));
      }, row);
      row.push_back(row[3 + ie_col]);
      t.rows.push_back(std::move(row));
      ++cell;
    }
  }
  return t;
}

CsvTable run_bound_surface(const SweepConfig& cfg) {
  CsvTable t;
  t.header = {"n_v", "n", "eps", "delta", "bound", "p_min", "sum_p_low", "sum_p_high"};
  for (std::int64_t n_v : cfg.n_v) {
    const auto n = static_cast<double>(pair_count(n_v, cfg.loops));
    for (double eps : cfg.eps) {
      for (double delta : cfg.delta) {
        std::vector<CsvCell> row{n_v, static_cast<std::int64_t>(n), eps, delta};
        if (eps > ie_bound_min_eps(n)) {
          const IeSelectionBound b = ie_selection_lower_bound(n, eps, delta);
          row.insert(row.end(), {b.value, b.p_min, b.sum_p_low, b.sum_p_high});
        } else {
          row.insert(row.end(), {std::monostate{}, std::monostate{}, std::monostate{}, std::monostate{}});
        }
        t.rows.push_back(std::move(row));
      }
    }
  }
  return t;
}

NamedPartition parse_named_partition(const std::string& spec) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos) {
    if (spec.empty()) throw DomainError("membership: empty path");
    return {"SBM-known", spec};
  }
  if (eq == 0 || eq + 1 == spec.size()) {
    throw DomainError("membership must be NAME=PATH or PATH, got '" + spec + "'");
  }
  return {spec.substr(0, eq), spec.substr(eq + 1)};
}

AnalyzeResult analyze(const std::vector<std::string>& paths, const std::vector<int>& sbm_blocks,
                      const std::vector<NamedPartition>& partitions, bool drop_loops,
                      bool membership_prior) {
  if (paths.empty()) throw DomainError("analyze: no graph files");
  AnalyzeResult out;
  std::vector<std::string> order;
  std::map<std::string, std::vector<double>> evidences;
  std::map<std::string, std::int64_t> wins;
  for (const std::string& path : paths) {
    try {
      Graph g = load_graph(path, format_from_path(path));
      if (drop_loops && g.loops_allowed()) g = g.without_loops();
      std::vector<ModelSpec> candidates = default_registry(sbm_blocks, membership_prior);
      const std::string stem = std::filesystem::path(path).stem().string();
      for (const NamedPartition& np : partitions) {
        std::string mp = np.path_pattern;
        for (auto pos = mp.find("{stem}"); pos != std::string::npos; pos = mp.find("{stem}")) {
          mp.replace(pos, 6, stem);
        }
        // Inserted before IE so ties keep the simpler models first.
        candidates.insert(candidates.end() - 1, ModelSpec::sbm_known(load_membership(mp), np.name));
      }
      const SelectionResult s = select_model(g, candidates);
      out.reports.push_back(selection_to_json(path, s));
      for (const EvidenceReport& r : s.reports) {
        const std::string label = r.model.label();
        if (!evidences.count(label)) order.push_back(label);
        std::vector<double>& v = evidences[label];
        if (r.ok() && std::isfinite(r.log_evidence)) v.push_back(r.log_evidence);
      }
      ++wins[s.best().model.label()];
    } catch (const NumericError& e) {
      ++out.failed_files;
      ++out.numeric_failures;
      out.reports.push_back({{"source", path}, {"error", e.what()}});
    } catch (const std::exception& e) {
      ++out.failed_files;
      out.reports.push_back({{"source", path}, {"error", e.what()}});
    }
  }
  out.summary.header = {"model", "count", "min", "q1", "median", "q3", "max", "wins"};
  for (const std::string& label : order) {
    const auto& v = evidences[label];
    std::vector<CsvCell> row{label, static_cast<std::int64_t>(v.size())};
    if (v.empty()) {
      for (int i = 0; i < 5; ++i) row.emplace_back(std::monostate{});
    } else {
      const FiveNumber f = five_number_summary(v);
      row.insert(row.end(), {f.min, f.q1, f.median, f.q3, f.max});
    }
    row.emplace_back(wins[label]);
    out.summary.rows.push_back(std::move(row));
  }
  return out;
}

CsvTable run_experiment(const std::string& experiment, const SweepConfig& cfg) {
  if (experiment == "bayes_factor_sweep") return run_bayes_factor_sweep(cfg);
  if (experiment == "er_sweep") return run_er_sweep(cfg);
  if (experiment == "sbm_heatmap") return run_sbm_heatmap(cfg);
  if (experiment == "ie_histogram") return run_ie_histogram(cfg);
  if (experiment == "bound_surface") return run_bound_surface(cfg);
  throw UnsupportedError("unknown experiment '" + experiment + "'");
}

}  // namespace occam
