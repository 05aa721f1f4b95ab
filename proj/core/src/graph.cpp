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

#include "cgm/graph.hpp"

#include <algorithm>

#include "cgm/errors.hpp"

namespace cgm {
namespace {

void fill_csr(std::size_t n, const std::vector<Edge>& arcs, bool by_source,
              std::vector<std::size_t>& offsets, std::vector<NodeId>& targets) {
  offsets.assign(n + 1, 0);
  for (const Edge& e : arcs) ++offsets[(by_source ? e.source : e.target) + 1];
  for (std::size_t v = 0; v < n; ++v) offsets[v + 1] += offsets[v];
  targets.resize(arcs.size());
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  // `arcs` is sorted by (source, target), so both directions come out sorted.
  for (const Edge& e : arcs) {
    if (by_source) {
      targets[cursor[e.source]++] = e.target;
    } else {
      targets[cursor[e.target]++] = e.source;
    }
  }
}

}  // namespace

CallGraph CallGraph::from_edges(std::vector<std::string> names, std::vector<Edge> edges,
                                bool directed) {
  CallGraph g;
  g.directed_ = directed;
  const std::size_t n = names.size();
  g.index_.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (!g.index_.emplace(names[v], static_cast<NodeId>(v)).second) {
      throw InputError("duplicate node name '" + names[v] + "'");
    }
  }
  g.names_ = std::move(names);

  std::vector<Edge> arcs;
  arcs.reserve(directed ? edges.size() : 2 * edges.size());
  std::size_t raw = 0;
  for (const Edge& e : edges) {
    if (e.source >= n || e.target >= n) throw InputError("edge endpoint out of range");
    if (e.source == e.target) {
      ++g.stats_.self_loops_dropped;
      continue;
    }
    ++raw;
    arcs.push_back(e);
    if (!directed) arcs.push_back({e.target, e.source});
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  const std::size_t kept = directed ? arcs.size() : arcs.size() / 2;
  g.stats_.duplicates_dropped = raw - kept;

  fill_csr(n, arcs, true, g.out_offsets_, g.out_targets_);
  fill_csr(n, arcs, false, g.in_offsets_, g.in_sources_);
  return g;
}

std::size_t CallGraph::m() const noexcept {
  return directed_ ? out_targets_.size() : out_targets_.size() / 2;
}

bool CallGraph::has_edge(NodeId source, NodeId target) const noexcept {
  if (source >= n() || target >= n()) return false;
  auto succ = successors(source);
  return std::binary_search(succ.begin(), succ.end(), target);
}

std::optional<NodeId> CallGraph::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Edge> CallGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(m());
  for (NodeId u = 0; u < n(); ++u) {
    for (NodeId v : successors(u)) {
      if (directed_ || u < v) out.push_back({u, v});
    }
  }
  return out;
}

NodeId GraphBuilder::intern(std::string_view name) {
  auto [it, inserted] =
      index_.try_emplace(std::string(name), static_cast<NodeId>(names_.size()));
  if (inserted) names_.emplace_back(name);
  return it->second;
}

void GraphBuilder::add_edge(std::string_view caller, std::string_view callee) {
  const NodeId u = intern(caller);
  const NodeId v = intern(callee);
  edges_.push_back({u, v});
}

CallGraph GraphBuilder::build(bool directed) && {
  return CallGraph::from_edges(std::move(names_), std::move(edges_), directed);
}

}  // namespace cgm
