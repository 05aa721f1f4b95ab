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

#include "cgm/transform.hpp"

#include <algorithm>
#include <numeric>

namespace cgm {

CallGraph symmetrize(const CallGraph& g) {
  if (!g.directed()) return g;
  return CallGraph::from_edges(g.names(), g.edges(), /*directed=*/false);
}

std::vector<std::size_t> weak_component_labels(const CallGraph& g, std::size_t* count) {
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  const std::size_t n = g.n();
  std::vector<std::size_t> label(n, kUnset);
  std::vector<NodeId> stack;
  std::size_t next = 0;
  for (NodeId root = 0; root < n; ++root) {
    if (label[root] != kUnset) continue;
    label[root] = next;
    stack.push_back(root);
    while (!stack.empty()) {
      const NodeId u = stack.back();
      stack.pop_back();
      for (auto nbrs : {g.successors(u), g.predecessors(u)}) {
        for (NodeId v : nbrs) {
          if (label[v] == kUnset) {
            label[v] = next;
            stack.push_back(v);
          }
        }
      }
    }
    ++next;
  }
  if (count != nullptr) *count = next;
  return label;
}

CallGraph induced_subgraph(const CallGraph& g, const std::vector<NodeId>& keep) {
  constexpr NodeId kDropped = static_cast<NodeId>(-1);
  std::vector<NodeId> remap(g.n(), kDropped);
  std::vector<std::string> names;
  names.reserve(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    remap[keep[i]] = static_cast<NodeId>(i);
    names.push_back(g.name(keep[i]));
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (remap[e.source] != kDropped && remap[e.target] != kDropped) {
      edges.push_back({remap[e.source], remap[e.target]});
    }
  }
  return CallGraph::from_edges(std::move(names), std::move(edges), g.directed());
}

CallGraph largest_wcc(const CallGraph& g) {
  std::size_t count = 0;
  const auto label = weak_component_labels(g, &count);
  if (count <= 1) return g;
  std::vector<std::size_t> sizes(count, 0);
  for (std::size_t l : label) ++sizes[l];
  // Labels follow smallest member id, so the first maximum wins ties.
  const std::size_t best =
      static_cast<std::size_t>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
  std::vector<NodeId> keep;
  keep.reserve(sizes[best]);
  for (NodeId v = 0; v < g.n(); ++v) {
    if (label[v] == best) keep.push_back(v);
  }
  return induced_subgraph(g, keep);
}

}  // namespace cgm
