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
#include <vector>

#include "cgm/graph.hpp"

namespace cgm {

// Undirected view: {i, j} present iff (i, j) or (j, i) is. Node table is kept.
CallGraph symmetrize(const CallGraph& g);

// Component label per node, ignoring edge direction. Labels are assigned in
// order of each component's smallest node id.
std::vector<std::size_t> weak_component_labels(const CallGraph& g,
                                               std::size_t* count = nullptr);

// Induced subgraph on the largest weakly connected component; ties go to the
// component containing the smallest node id. Relative node order and names
// are preserved.
CallGraph largest_wcc(const CallGraph& g);

// Induced subgraph on `keep` (sorted, unique ids), densified in that order.
CallGraph induced_subgraph(const CallGraph& g, const std::vector<NodeId>& keep);

}  // namespace cgm
