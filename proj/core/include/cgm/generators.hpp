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

#include "cgm/graph.hpp"

namespace cgm {

enum class RandomModel { kErdosRenyiGnm, kErasedConfiguration };

struct RandomGraphSpec {
  RandomModel model = RandomModel::kErdosRenyiGnm;
  std::size_t n = 0;
  // Exact arc count for G(n, m). For the configuration model the arc count
  // is set by the sampled degrees; `m` only has to satisfy the range check.
  std::size_t m = 0;
  double gamma = 2.5;
  std::uint64_t seed = 0;
};

// Throws SpecError unless n >= 2, m <= n(n-1) and, for the configuration
// model, gamma > 1.
void validate(const RandomGraphSpec& spec);

/// Directed random graph, deterministic in `spec`.
///
/// kErdosRenyiGnm draws exactly m distinct ordered pairs (i != j) uniformly.
/// kErasedConfiguration samples in-degrees from a discrete power law with
/// exponent gamma and minimum 1 (capped at n-1), spreads the same number of
/// out-stubs uniformly over nodes, pairs stubs uniformly at random and then
/// erases self-loops and duplicate arcs.
///
/// Nodes are named "v0", "v1", ... and every node exists even when isolated.
CallGraph generate_random(const RandomGraphSpec& spec);

// Deterministic fixtures. Directed unless stated; names are "v<i>" except
// where noted.
namespace fixtures {

// Hub "h" calling leaves "l0".."l{L-1}".
CallGraph star(std::size_t leaves);
// Same star with every edge reciprocated.
CallGraph reciprocal_star(std::size_t leaves);
// v0 -> v1 -> ... -> v{n-1} -> v0.
CallGraph directed_cycle(std::size_t n);
// v0 -> v1 -> ... -> v{n-1}.
CallGraph chain(std::size_t n);
// Every ordered pair.
CallGraph complete(std::size_t n);
// `count` directed 3-cycles, consecutive triangles joined by one arc.
CallGraph bridged_triangles(std::size_t count);
// Deterministic hierarchical graph: a 5-clique module replicated 5x per
// level, peripheral nodes of every replica wired to the root hub.
// `levels` = 1 yields the bare clique.
CallGraph hierarchical(std::size_t levels);

}  // namespace fixtures

}  // namespace cgm
