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
#include <vector>

#include "cgm/graph.hpp"

namespace cgm {

struct GeodesicSummary {
  // n(n-1) / sum of inverse distances; empty when no pair is reachable.
  std::optional<double> harmonic_mean_ell;
  double inverse_distance_sum = 0.0;  // over ordered pairs i != j
  double reachable_pair_fraction = 0.0;
  bool directed = false;
  // Same sum normalized by n(n+1) instead of n(n-1).
  std::optional<double> ell_n_plus_one;

  friend bool operator==(const GeodesicSummary&, const GeodesicSummary&) = default;
};

/// Harmonic mean geodesic distance over all ordered pairs, by BFS from every
/// node. Unreachable pairs add nothing to the inverse sum. With
/// `directed == false` distances are taken on the symmetrized graph.
/// Throws PreconditionError when n < 2.
GeodesicSummary harmonic_geodesic_mean(const CallGraph& g, bool directed = false);

struct HistogramBucket {
  double lower = 0.0;  // inclusive; upper = 2 * lower
  std::size_t count = 0;

  friend bool operator==(const HistogramBucket&, const HistogramBucket&) = default;
};

struct ValueCcdfPoint {
  double value = 0.0;
  double ccdf = 0.0;  // fraction of positive values strictly greater

  friend bool operator==(const ValueCcdfPoint&, const ValueCcdfPoint&) = default;
};

struct BetweennessDistribution {
  std::size_t zero_count = 0;
  std::vector<HistogramBucket> buckets;  // base-2 log spaced, ascending
  std::vector<ValueCcdfPoint> ccdf;      // over positive values

  friend bool operator==(const BetweennessDistribution&, const BetweennessDistribution&) = default;
};

struct BetweennessResult {
  std::vector<double> per_node;
  BetweennessDistribution distribution;

  friend bool operator==(const BetweennessResult&, const BetweennessResult&) = default;
};

/// Exact unnormalized betweenness over directed shortest paths (Brandes
/// dependency accumulation); endpoints are excluded. Sources are processed
/// in fixed chunks whose partial sums are reduced in chunk order, so the
/// result is bit-identical for any thread count.
BetweennessResult betweenness(const CallGraph& g);

BetweennessDistribution betweenness_distribution(const std::vector<double>& values);

struct ComponentStats {
  std::size_t wcc_count = 0;
  std::size_t scc_count = 0;
  std::size_t scc_nontrivial_count = 0;  // size >= 2
  double largest_scc_fraction = 0.0;
  std::size_t largest_scc_size = 0;
  std::size_t largest_wcc_size = 0;

  friend bool operator==(const ComponentStats&, const ComponentStats&) = default;
};

// SCC label per node (iterative Tarjan). Labels are dense, in completion order.
std::vector<std::size_t> strong_component_labels(const CallGraph& g,
                                                 std::size_t* count = nullptr);

ComponentStats component_stats(const CallGraph& g);

}  // namespace cgm
