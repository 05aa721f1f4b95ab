// Copyright 2026 The callgraph-metrics Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cgm/graph.hpp"

namespace cgm {

enum class InputFormat { kEdgeList, kDot };

// One `caller callee` pair per line. Lines starting with '#' and blank lines
// are skipped. Node ids follow first appearance.
CallGraph load_edge_list(std::string_view text);

// `digraph [name] { a -> b; "x y" -> z [attr=...]; }`. Edge chains are
// accepted; attribute lists, default-attribute statements and node
// statements are ignored. Subgraphs, nested blocks, strict graphs and
// undirected edges are rejected.
CallGraph load_dot_subset(std::string_view text);

CallGraph load_graph(std::string_view text, InputFormat format);
CallGraph load_graph_file(const std::filesystem::path& path, InputFormat format);

// Guesses from the extension: .dot and .gv are DOT, everything else is an
// edge list.
InputFormat format_for_path(const std::filesystem::path& path);

/// Serializes a directed graph as an edge list. Edges are ordered so that
/// reloading assigns the same node ids whenever such an order exists (always
/// true for graphs produced by the loaders). Isolated nodes cannot be
/// represented and are lost.
std::string write_edge_list(const CallGraph& g);

struct CorpusEntry {
  std::string label;
  std::string language;
  std::string domain;
  std::filesystem::path path;
  std::optional<std::uint64_t> expected_n;
  std::optional<std::uint64_t> expected_m;
};

// Tab-separated `label language domain path [N M]`, '#' comments allowed.
// Relative paths resolve against `base_dir`.
std::vector<CorpusEntry> parse_manifest(std::string_view text,
                                        const std::filesystem::path& base_dir = {});

// Throws ValidationError when the entry declares counts that `g` does not have.
void validate_counts(const CorpusEntry& entry, const CallGraph& g);

std::string read_file(const std::filesystem::path& path);

}  // namespace cgm
