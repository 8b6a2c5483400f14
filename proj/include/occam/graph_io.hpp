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

#ifndef OCCAM_GRAPH_IO_HPP_
#define OCCAM_GRAPH_IO_HPP_

#include <filesystem>
#include <iosfwd>
#include <string>

#include "occam/graph.hpp"

namespace occam {

// Edge list:
//   n_v <count> loops <0|1>
//   i j            (1-based, one undirected edge per line)
// Blank lines and lines starting with '#' are ignored.
//
// Dense CSV: n_v rows of n_v comma-separated 0/1 values, no header.
enum class GraphFormat { kEdgeList, kDenseCsv };

// ".csv" selects the dense format, anything else the edge list.
GraphFormat format_from_path(const std::filesystem::path& path);

Graph read_edge_list(std::istream& in);
void write_edge_list(const Graph& g, std::ostream& out);

// The CSV carries no loop flag. With loops_allowed = false a nonzero
// diagonal is a parse error.
Graph read_dense_csv(std::istream& in, bool loops_allowed);
void write_dense_csv(const Graph& g, std::ostream& out);

Graph load_graph(const std::filesystem::path& path, GraphFormat format,
                 bool csv_loops_allowed = true);
void save_graph(const Graph& g, const std::filesystem::path& path, GraphFormat format);

// Membership file: one 1-based block label per vertex, one per line, in
// vertex order. Blank lines and '#' comments are ignored.
BlockAssignment read_membership(std::istream& in);
BlockAssignment load_membership(const std::filesystem::path& path);

}  // namespace occam

#endif  // OCCAM_GRAPH_IO_HPP_
