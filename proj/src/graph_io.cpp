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

#include "occam/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "occam/errors.hpp"

namespace occam {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool skippable(const std::string& line) { return line.empty() || line.front() == '#'; }

std::optional<long long> parse_int(const std::string& token) {
  long long v = 0;
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, v);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return v;
}

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string tok; ss >> tok;) out.push_back(tok);
  return out;
}

}  // namespace

GraphFormat format_from_path(const std::filesystem::path& path) {
  return path.extension() == ".csv" ? GraphFormat::kDenseCsv : GraphFormat::kEdgeList;
}

Graph read_edge_list(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  std::optional<Adjacency> adj;
  bool loops = true;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (skippable(line)) continue;
    const auto tok = split_ws(line);
    if (!adj) {
      if (tok.size() != 4 || tok[0] != "n_v" || tok[2] != "loops") {
        throw ParseError("expected header 'n_v <count> loops <0|1>'", line_no);
      }
      const auto nv = parse_int(tok[1]);
      const auto lp = parse_int(tok[3]);
      if (!nv || *nv < 1) throw ParseError("vertex count must be a positive integer", line_no);
      if (!lp || (*lp != 0 && *lp != 1)) throw ParseError("loops flag must be 0 or 1", line_no);
      adj = Adjacency::Zero(*nv, *nv);
      loops = *lp == 1;
      continue;
    }
    if (tok.size() != 2) throw ParseError("expected 'i j'", line_no);
    const auto i = parse_int(tok[0]);
    const auto j = parse_int(tok[1]);
    if (!i || !j) throw ParseError("vertex indices must be integers", line_no);
    const long long n = adj->rows();
    if (*i < 1 || *i > n || *j < 1 || *j > n) {
      throw ParseError("vertex index out of range 1.." + std::to_string(n), line_no);
    }
    if (*i == *j && !loops) throw ParseError("self-loop in a graph declared loops 0", line_no);
    (*adj)(*i - 1, *j - 1) = 1;
    (*adj)(*j - 1, *i - 1) = 1;
  }
  if (!adj) throw ParseError("missing header", 0);
  return Graph(std::move(*adj), loops);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  const Eigen::Index n = g.num_vertices();
  out << "n_v " << n << " loops " << (g.loops_allowed() ? 1 : 0) << '\n';
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      if (g.has_edge(i, j)) out << i + 1 << ' ' << j + 1 << '\n';
    }
  }
}

Graph read_dense_csv(std::istream& in, bool loops_allowed) {
  std::vector<std::vector<std::uint8_t>> rows;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty()) continue;
    std::vector<std::uint8_t> row;
    std::istringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) {
      const auto v = parse_int(trim(cell));
      if (!v || (*v != 0 && *v != 1)) throw ParseError("entries must be 0 or 1", line_no);
      row.push_back(static_cast<std::uint8_t>(*v));
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError("row has " + std::to_string(row.size()) + " entries, expected " +
                           std::to_string(rows.front().size()),
                       line_no);
    }
    rows.push_back(std::move(row));
  }
  const std::size_t n = rows.size();
  if (n == 0) throw ParseError("empty adjacency", 0);
  if (rows.front().size() != n) throw ParseError("adjacency is not square", 1);
  Adjacency a(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!loops_allowed && rows[i][i] != 0) {
      throw ParseError("nonzero diagonal but loops are not allowed", i + 1);
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (rows[i][j] != rows[j][i]) {
        throw ParseError("asymmetric entry (" + std::to_string(i + 1) + ", " +
                             std::to_string(j + 1) + ")",
                         i + 1);
      }
    }
  }
  return Graph(std::move(a), loops_allowed);
}

void write_dense_csv(const Graph& g, std::ostream& out) {
  const Eigen::Index n = g.num_vertices();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (j) out << ',';
      out << static_cast<int>(g.adjacency()(i, j));
    }
    out << '\n';
  }
}

Graph load_graph(const std::filesystem::path& path, GraphFormat format, bool csv_loops_allowed) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string(), 0);
  return format == GraphFormat::kDenseCsv ? read_dense_csv(in, csv_loops_allowed)
                                          : read_edge_list(in);
}

void save_graph(const Graph& g, const std::filesystem::path& path, GraphFormat format) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  if (format == GraphFormat::kDenseCsv) {
    write_dense_csv(g, out);
  } else {
    write_edge_list(g, out);
  }
}

BlockAssignment read_membership(std::istream& in) {
  std::vector<int> labels;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (skippable(line)) continue;
    const auto v = parse_int(line);
    if (!v || *v < 1) throw ParseError("block labels must be positive integers", line_no);
    labels.push_back(static_cast<int>(*v));
  }
  if (labels.empty()) throw ParseError("no labels", 0);
  try {
    return BlockAssignment::from_one_based(labels);
  } catch (const DomainError& e) {
    throw ParseError(e.what(), 0);
  }
}

BlockAssignment load_membership(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string(), 0);
  return read_membership(in);
}

}  // namespace occam
