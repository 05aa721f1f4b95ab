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

#include "cgm/generators.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "cgm/errors.hpp"
#include "cgm/random.hpp"
#include "cgm/special.hpp"

namespace cgm {
namespace {

std::vector<std::string> numbered(std::size_t n, const char* prefix = "v") {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
  return names;
}

// Ordered pair index p in [0, n(n-1)) to the p-th non-loop arc.
Edge arc_from_index(std::uint64_t p, std::size_t n) {
  const auto source = static_cast<NodeId>(p / (n - 1));
  auto target = static_cast<NodeId>(p % (n - 1));
  if (target >= source) ++target;
  return {source, target};
}

CallGraph gnm(const RandomGraphSpec& spec, Rng& rng) {
  const std::uint64_t pairs = static_cast<std::uint64_t>(spec.n) * (spec.n - 1);
  const bool complement = spec.m > pairs / 2;
  const std::uint64_t draws = complement ? pairs - spec.m : spec.m;
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(draws * 2);
  std::vector<std::uint64_t> order;
  order.reserve(draws);
  while (order.size() < draws) {
    const std::uint64_t p = rng.below(pairs);
    if (chosen.insert(p).second) order.push_back(p);
  }
  std::vector<Edge> edges;
  edges.reserve(spec.m);
  if (complement) {
    for (std::uint64_t p = 0; p < pairs; ++p) {
      if (!chosen.contains(p)) edges.push_back(arc_from_index(p, spec.n));
    }
  } else {
    for (std::uint64_t p : order) edges.push_back(arc_from_index(p, spec.n));
  }
  return CallGraph::from_edges(numbered(spec.n), std::move(edges));
}

CallGraph erased_configuration(const RandomGraphSpec& spec, Rng& rng) {
  const DiscretePowerLawSampler sampler(spec.gamma, 1, spec.n - 1);
  std::vector<NodeId> in_stubs;
  for (std::size_t v = 0; v < spec.n; ++v) {
    const std::uint64_t degree = sampler(rng.uniform());
    in_stubs.insert(in_stubs.end(), degree, static_cast<NodeId>(v));
  }
  // Out-stub owners are i.i.d. uniform, so pairing them in draw order with
  // the in-stubs is a uniform matching for the resulting out-degrees.
  std::vector<Edge> edges;
  edges.reserve(in_stubs.size());
  for (NodeId target : in_stubs) {
    const auto source = static_cast<NodeId>(rng.below(spec.n));
    edges.push_back({source, target});
  }
  CallGraph g = CallGraph::from_edges(numbered(spec.n), std::move(edges));
  return g;
}

}  // namespace

void validate(const RandomGraphSpec& spec) {
  if (spec.n < 2) throw SpecError("random graph needs n >= 2");
  const std::uint64_t pairs = static_cast<std::uint64_t>(spec.n) * (spec.n - 1);
  if (spec.m > pairs) {
    throw SpecError("m = " + std::to_string(spec.m) + " exceeds n(n-1) = " + std::to_string(pairs));
  }
  if (spec.model == RandomModel::kErasedConfiguration && !(spec.gamma > 1.0)) {
    throw SpecError("configuration model needs gamma > 1");
  }
}

CallGraph generate_random(const RandomGraphSpec& spec) {
  validate(spec);
  Rng rng(derive_seed(spec.seed, static_cast<std::uint64_t>(spec.model)));
  return spec.model == RandomModel::kErdosRenyiGnm ? gnm(spec, rng)
                                                    : erased_configuration(spec, rng);
}

namespace fixtures {

CallGraph star(std::size_t leaves) {
  std::vector<std::string> names{"h"};
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < leaves; ++i) {
    names.push_back("l" + std::to_string(i));
    edges.push_back({0, static_cast<NodeId>(i + 1)});
  }
  return CallGraph::from_edges(std::move(names), std::move(edges));
}

CallGraph reciprocal_star(std::size_t leaves) {
  std::vector<std::string> names{"h"};
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < leaves; ++i) {
    names.push_back("l" + std::to_string(i));
    const auto leaf = static_cast<NodeId>(i + 1);
    edges.push_back({0, leaf});
    edges.push_back({leaf, 0});
  }
  return CallGraph::from_edges(std::move(names), std::move(edges));
}

CallGraph directed_cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    edges.push_back({static_cast<NodeId>(i), static_cast<NodeId>((i + 1) % n)});
  }
  return CallGraph::from_edges(numbered(n), std::move(edges));
}

CallGraph chain(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    edges.push_back({static_cast<NodeId>(i), static_cast<NodeId>(i + 1)});
  }
  return CallGraph::from_edges(numbered(n), std::move(edges));
}

CallGraph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) edges.push_back({static_cast<NodeId>(i), static_cast<NodeId>(j)});
    }
  }
  return CallGraph::from_edges(numbered(n), std::move(edges));
}

CallGraph bridged_triangles(std::size_t count) {
  std::vector<Edge> edges;
  for (std::size_t t = 0; t < count; ++t) {
    const auto a = static_cast<NodeId>(3 * t);
    edges.push_back({a, a + 1});
    edges.push_back({a + 1, a + 2});
    edges.push_back({a + 2, a});
    if (t + 1 < count) edges.push_back({a + 2, a + 3});
  }
  return CallGraph::from_edges(numbered(3 * count), std::move(edges));
}

CallGraph hierarchical(std::size_t levels) {
  if (levels == 0) throw SpecError("hierarchical fixture needs at least one level");
  // Level 1: 5-clique rooted at node 0, peripheral nodes 1..4.
  std::size_t n = 5;
  std::vector<Edge> edges;
  for (NodeId i = 0; i < 5; ++i) {
    for (NodeId j = i + 1; j < 5; ++j) edges.push_back({i, j});
  }
  std::vector<NodeId> peripheral{1, 2, 3, 4};
  for (std::size_t level = 2; level <= levels; ++level) {
    const std::size_t block = n;
    const std::vector<Edge> base = edges;
    std::vector<NodeId> next_peripheral;
    for (std::size_t copy = 1; copy < 5; ++copy) {
      const auto offset = static_cast<NodeId>(copy * block);
      for (const Edge& e : base) edges.push_back({e.source + offset, e.target + offset});
      for (NodeId p : peripheral) {
        edges.push_back({p + offset, 0});
        next_peripheral.push_back(p + offset);
      }
    }
    n = 5 * block;
    peripheral = std::move(next_peripheral);
  }
  return CallGraph::from_edges(numbered(n), std::move(edges));
}

}  // namespace fixtures

}  // namespace cgm
