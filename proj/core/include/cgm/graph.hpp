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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cgm {

using NodeId = std::uint32_t;

struct Edge {
  NodeId source;
  NodeId target;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// What canonicalization removed while building a graph.
struct IngestStats {
  std::size_t self_loops_dropped = 0;
  std::size_t duplicates_dropped = 0;

  friend bool operator==(const IngestStats&, const IngestStats&) = default;
};

/// Simple graph with interned node names, stored as sorted CSR adjacency in
/// both directions.
///
/// Invariants: no self-loops, no duplicate edges, node ids dense in [0, n),
/// names unique, in-adjacency is the exact transpose of out-adjacency. An
/// undirected graph (`directed() == false`) stores every edge in both
/// directions and `m()` counts each undirected edge once.
///
/// Instances are immutable once built and safe to share between threads.
class CallGraph {
 public:
  CallGraph() = default;

  /// Builds a canonical graph: self-loops and duplicates are dropped and
  /// counted in `ingest_stats()`. For undirected graphs each input pair is
  /// taken as an unordered edge.
  static CallGraph from_edges(std::vector<std::string> names,
                              std::vector<Edge> edges, bool directed = true);

  std::size_t n() const noexcept { return names_.size(); }
  // Directed: number of arcs. Undirected: number of unordered edges.
  std::size_t m() const noexcept;
  bool directed() const noexcept { return directed_; }

  std::span<const NodeId> successors(NodeId v) const noexcept {
    return {out_targets_.data() + out_offsets_[v],
            out_targets_.data() + out_offsets_[v + 1]};
  }
  std::span<const NodeId> predecessors(NodeId v) const noexcept {
    return {in_sources_.data() + in_offsets_[v],
            in_sources_.data() + in_offsets_[v + 1]};
  }
  std::size_t out_degree(NodeId v) const noexcept {
    return out_offsets_[v + 1] - out_offsets_[v];
  }
  std::size_t in_degree(NodeId v) const noexcept {
    return in_offsets_[v + 1] - in_offsets_[v];
  }
  bool has_edge(NodeId source, NodeId target) const noexcept;

  const std::string& name(NodeId v) const { return names_[v]; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<NodeId> find(std::string_view name) const;

  // Directed arcs in (source, target) order; undirected graphs list each
  // edge once with source < target.
  std::vector<Edge> edges() const;

  const IngestStats& ingest_stats() const noexcept { return stats_; }

  friend bool operator==(const CallGraph& a, const CallGraph& b) {
    return a.directed_ == b.directed_ && a.names_ == b.names_ &&
           a.out_offsets_ == b.out_offsets_ && a.out_targets_ == b.out_targets_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, NodeId> index_;
  std::vector<std::size_t> out_offsets_{0};
  std::vector<NodeId> out_targets_;
  std::vector<std::size_t> in_offsets_{0};
  std::vector<NodeId> in_sources_;
  bool directed_ = true;
  IngestStats stats_;
};

// Interns names in first-appearance order and collects raw edges.
class GraphBuilder {
 public:
  NodeId intern(std::string_view name);
  void add_edge(std::string_view caller, std::string_view callee);
  void add_edge(NodeId caller, NodeId callee) { edges_.push_back({caller, callee}); }

  std::size_t node_count() const noexcept { return names_.size(); }
  CallGraph build(bool directed = true) &&;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, NodeId> index_;
  std::vector<Edge> edges_;
};

}  // namespace cgm
