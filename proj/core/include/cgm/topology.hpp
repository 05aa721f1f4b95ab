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
#include <map>
#include <optional>
#include <vector>

#include "cgm/graph.hpp"

namespace cgm {

enum class AssortativityMode { kInIn, kOutOut, kTotal };

struct AssortativityResult {
  AssortativityMode mode = AssortativityMode::kTotal;
  std::optional<double> rho;  // empty when the degree variance term is zero

  friend bool operator==(const AssortativityResult&, const AssortativityResult&) = default;
};

/// Degree correlation over the directed edges (u, v) of `g`, using the
/// endpoint degree pair selected by `mode`: in-degrees, out-degrees, or
/// total degrees on the symmetrized graph. With j, k the endpoint degrees:
///
///   rho = (<jk> - <(j+k)/2>^2) / (<(j^2+k^2)/2> - <(j+k)/2>^2)
///
/// where <.> averages over edges. The sums are accumulated in exact integer
/// arithmetic. Throws PreconditionError on an edgeless graph.
AssortativityResult assortativity(const CallGraph& g, AssortativityMode mode);

struct ScaleFreeResult {
  double s = 0.0;      // sum of d_i d_j over undirected edges
  double s_max = 0.0;  // sum of (d_i / 2) d_i^2 over nodes
  double S = 0.0;      // s / s_max

  friend bool operator==(const ScaleFreeResult&, const ScaleFreeResult&) = default;
};

// Computed on the symmetrized graph. Throws PreconditionError when it has no
// edges.
ScaleFreeResult scale_free_metric(const CallGraph& g);

struct ClusteringResult {
  std::vector<std::optional<double>> per_node;  // empty for degree < 2
  std::optional<double> global_c;               // mean over defined nodes
  std::map<std::uint64_t, double> by_degree;    // degree -> mean C_v

  friend bool operator==(const ClusteringResult&, const ClusteringResult&) = default;
};

// Local clustering on the symmetrized graph.
ClusteringResult clustering(const CallGraph& g);

struct ClusteringSlope {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  // root-mean-square residual in log space
  std::size_t points = 0;

  friend bool operator==(const ClusteringSlope&, const ClusteringSlope&) = default;
};

// Least-squares slope of log C(k) against log k over the positive entries.
// Throws InsufficientDataError with fewer than three such points.
ClusteringSlope clustering_by_degree_fit(const std::map<std::uint64_t, double>& by_degree);
inline ClusteringSlope clustering_by_degree_fit(const ClusteringResult& res) {
  return clustering_by_degree_fit(res.by_degree);
}

// Distance class counts for one centre node: pairs[d - 1] holds neighbour
// pairs at distance d in the graph without the centre, for d in [1, d_max].
struct NodeProfile {
  NodeId node = 0;
  std::uint64_t degree = 0;
  std::vector<std::uint64_t> pairs;
  std::uint64_t beyond = 0;        // finite distance > d_max
  std::uint64_t disconnected = 0;  // no path avoiding the centre
  std::uint64_t total_pairs = 0;   // degree choose 2

  friend bool operator==(const NodeProfile&, const NodeProfile&) = default;
};

/// Distance profile of neighbour pairs around each node of degree >= 2 on
/// the symmetrized graph. cell[d][k] averages pairs_at(d) / C(k, 2) over
/// degree-k nodes; cell[1][k] coincides with clustering().by_degree[k].
struct ClusteringProfile {
  std::size_t d_max = 0;
  std::vector<std::map<std::uint64_t, double>> cell;  // index d - 1
  std::vector<double> aggregate;                      // index d - 1
  double beyond_aggregate = 0.0;
  double disconnected_aggregate = 0.0;
  std::size_t eligible_nodes = 0;
  std::vector<NodeProfile> per_node;

  friend bool operator==(const ClusteringProfile&, const ClusteringProfile&) = default;
};

// Throws RangeError when d_max < 1.
ClusteringProfile clustering_profile(const CallGraph& g, std::size_t d_max);

struct ReciprocityResult {
  double varrho = 0.0;  // fraction of arcs whose reverse is present
  double a_bar = 0.0;   // m / (n (n - 1))
  std::optional<double> rho;  // (varrho - a_bar) / (1 - a_bar); empty if a_bar == 1
  std::uint64_t reciprocal_arcs = 0;

  friend bool operator==(const ReciprocityResult&, const ReciprocityResult&) = default;
};

// Directed graphs only, m >= 1 and n >= 2 (PreconditionError otherwise).
ReciprocityResult reciprocity(const CallGraph& g);

const char* to_string(AssortativityMode mode);

}  // namespace cgm
