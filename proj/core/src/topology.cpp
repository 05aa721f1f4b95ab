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

#include "cgm/topology.hpp"

#include <algorithm>
#include <cmath>

#include "cgm/errors.hpp"
#include "cgm/parallel.hpp"
#include "cgm/transform.hpp"

namespace cgm {
namespace {

__extension__ typedef __int128 Int128;

std::vector<std::uint64_t> undirected_degrees(const CallGraph& g) {
  std::vector<std::uint64_t> deg(g.n(), 0);
  for (NodeId v = 0; v < g.n(); ++v) {
    if (!g.directed()) {
      deg[v] = g.out_degree(v);
      continue;
    }
    // |successors U predecessors| by merging two sorted lists.
    auto a = g.successors(v);
    auto b = g.predecessors(v);
    std::size_t i = 0, j = 0, count = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i] < b[j])) {
        ++i;
      } else if (i == a.size() || b[j] < a[i]) {
        ++j;
      } else {
        ++i;
        ++j;
      }
      ++count;
    }
    deg[v] = count;
  }
  return deg;
}

std::size_t count_common(std::span<const NodeId> a, std::span<const NodeId> b) {
  std::size_t i = 0, j = 0, common = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++common;
      ++i;
      ++j;
    }
  }
  return common;
}

// Edges among the neighbours of v on an undirected graph.
std::uint64_t neighbour_edges(const CallGraph& u, NodeId v) {
  std::uint64_t twice = 0;
  for (NodeId w : u.successors(v)) twice += count_common(u.successors(v), u.successors(w));
  return twice / 2;
}

std::uint64_t choose2(std::uint64_t k) { return k * (k - 1) / 2; }

struct ArcIndex {
  std::vector<std::size_t> offsets;  // CSR offsets of successors()
  std::vector<NodeId> source;        // owner of each arc position

  explicit ArcIndex(const CallGraph& u) : offsets(u.n() + 1, 0) {
    for (NodeId v = 0; v < u.n(); ++v) offsets[v + 1] = offsets[v] + u.out_degree(v);
    source.resize(offsets.back());
    for (NodeId v = 0; v < u.n(); ++v) {
      std::fill(source.begin() + static_cast<std::ptrdiff_t>(offsets[v]),
                source.begin() + static_cast<std::ptrdiff_t>(offsets[v + 1]), v);
    }
  }

  NodeId target(const CallGraph& u, std::size_t pos) const {
    return u.successors(source[pos])[pos - offsets[source[pos]]];
  }

  std::size_t find(const CallGraph& u, NodeId a, NodeId b) const {
    auto succ = u.successors(a);
    return offsets[a] +
           static_cast<std::size_t>(std::lower_bound(succ.begin(), succ.end(), b) - succ.begin());
  }
};

// Biconnected-block label of every arc of an undirected graph (iterative
// Hopcroft-Tarjan). Two neighbours j, k of i remain connected after removing
// i exactly when the edges {i, j} and {i, k} lie in the same block.
std::vector<std::uint32_t> arc_blocks(const CallGraph& u, const ArcIndex& arcs) {
  const std::size_t n = u.n();
  std::vector<std::uint32_t> block(arcs.source.size(), 0);
  std::vector<std::uint32_t> disc(n, 0), low(n, 0);
  std::uint32_t time = 0;
  std::uint32_t next_block = 0;

  struct Frame {
    NodeId v;
    NodeId parent;
    std::size_t tree_arc;  // position of parent -> v
    std::size_t next;      // index into successors(v)
  };
  constexpr NodeId kNone = static_cast<NodeId>(-1);
  std::vector<Frame> frames;
  std::vector<std::size_t> arc_stack;

  auto label = [&](std::size_t pos, std::uint32_t b) {
    block[pos] = b;
    block[arcs.find(u, arcs.target(u, pos), arcs.source[pos])] = b;
  };

  for (NodeId root = 0; root < n; ++root) {
    if (disc[root] != 0 || u.out_degree(root) == 0) continue;
    disc[root] = low[root] = ++time;
    frames.push_back({root, kNone, 0, 0});
    while (!frames.empty()) {
      Frame& f = frames.back();
      auto succ = u.successors(f.v);
      if (f.next < succ.size()) {
        const std::size_t pos = arcs.offsets[f.v] + f.next;
        const NodeId w = succ[f.next++];
        if (w == f.parent) continue;
        if (disc[w] == 0) {
          arc_stack.push_back(pos);
          disc[w] = low[w] = ++time;
          frames.push_back({w, f.v, pos, 0});
        } else if (disc[w] < disc[f.v]) {
          arc_stack.push_back(pos);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      const Frame done = f;
      frames.pop_back();
      if (frames.empty()) break;
      const NodeId parent = frames.back().v;
      low[parent] = std::min(low[parent], low[done.v]);
      if (low[done.v] >= disc[parent]) {
        const std::uint32_t b = next_block++;
        while (true) {
          const std::size_t pos = arc_stack.back();
          arc_stack.pop_back();
          label(pos, b);
          if (pos == done.tree_arc) break;
        }
      }
    }
  }
  return block;
}

// Scratch space for depth-limited BFS, reused across centre nodes.
struct BfsScratch {
  std::vector<std::uint32_t> seen_stamp;
  std::vector<std::uint32_t> target_stamp;
  std::vector<std::uint32_t> target_slot;
  std::vector<NodeId> frontier;
  std::vector<NodeId> next;
  std::uint32_t seen_epoch = 0;
  std::uint32_t target_epoch = 0;

  explicit BfsScratch(std::size_t n) : seen_stamp(n, 0), target_stamp(n, 0), target_slot(n, 0) {}
};

NodeProfile profile_node(const CallGraph& u, const ArcIndex& arcs,
                         const std::vector<std::uint32_t>& blocks, NodeId centre,
                         std::size_t d_max, BfsScratch& s) {
  auto nbrs = u.successors(centre);
  const std::size_t k = nbrs.size();
  NodeProfile p;
  p.node = centre;
  p.degree = k;
  p.pairs.assign(d_max, 0);
  p.total_pairs = choose2(k);

  std::vector<std::uint32_t> nbr_block(k);
  for (std::size_t a = 0; a < k; ++a) nbr_block[a] = blocks[arcs.offsets[centre] + a];

  // Pairs in different blocks are disconnected once the centre is gone.
  {
    std::vector<std::uint32_t> sorted = nbr_block;
    std::sort(sorted.begin(), sorted.end());
    std::uint64_t connected = 0;
    for (std::size_t a = 0; a < sorted.size();) {
      std::size_t b = a;
      while (b < sorted.size() && sorted[b] == sorted[a]) ++b;
      connected += choose2(b - a);
      a = b;
    }
    p.disconnected = p.total_pairs - connected;
  }

  // Tag neighbours with their slot so BFS hits can be recognised.
  ++s.target_epoch;
  for (std::size_t a = 0; a < k; ++a) {
    s.target_stamp[nbrs[a]] = s.target_epoch;
    s.target_slot[nbrs[a]] = static_cast<std::uint32_t>(a);
  }

  std::uint64_t found_total = 0;
  for (std::size_t a = 0; a + 1 < k; ++a) {
    std::size_t wanted = 0;
    for (std::size_t b = a + 1; b < k; ++b) wanted += nbr_block[b] == nbr_block[a];
    if (wanted == 0) continue;

    ++s.seen_epoch;
    s.seen_stamp[centre] = s.seen_epoch;
    s.seen_stamp[nbrs[a]] = s.seen_epoch;
    s.frontier.assign(1, nbrs[a]);
    for (std::size_t depth = 1; depth <= d_max && wanted > 0 && !s.frontier.empty(); ++depth) {
      s.next.clear();
      for (NodeId x : s.frontier) {
        for (NodeId y : u.successors(x)) {
          if (s.seen_stamp[y] == s.seen_epoch) continue;
          s.seen_stamp[y] = s.seen_epoch;
          s.next.push_back(y);
          if (s.target_stamp[y] == s.target_epoch && s.target_slot[y] > a) {
            ++p.pairs[depth - 1];
            ++found_total;
            --wanted;
          }
        }
      }
      s.frontier.swap(s.next);
    }
  }
  p.beyond = p.total_pairs - p.disconnected - found_total;
  return p;
}

}  // namespace

AssortativityResult assortativity(const CallGraph& g, AssortativityMode mode) {
  if (g.m() == 0) throw PreconditionError("assortativity of an edgeless graph");
  std::vector<std::uint64_t> deg(g.n());
  if (mode == AssortativityMode::kTotal) {
    deg = undirected_degrees(g);
  } else {
    for (NodeId v = 0; v < g.n(); ++v) {
      deg[v] = mode == AssortativityMode::kInIn ? g.in_degree(v) : g.out_degree(v);
    }
  }
  Int128 sum_jk = 0, sum_j_plus_k = 0, sum_sq = 0;
  const auto edges = g.edges();
  for (const Edge& e : edges) {
    const Int128 j = deg[e.source];
    const Int128 k = deg[e.target];
    sum_jk += j * k;
    sum_j_plus_k += j + k;
    sum_sq += j * j + k * k;
  }
  const Int128 m = static_cast<Int128>(edges.size());
  // Both terms of the ratio scaled by 4 m^2.
  const Int128 num = 4 * m * sum_jk - sum_j_plus_k * sum_j_plus_k;
  const Int128 den = 2 * m * sum_sq - sum_j_plus_k * sum_j_plus_k;
  AssortativityResult out;
  out.mode = mode;
  if (den != 0) out.rho = static_cast<double>(num) / static_cast<double>(den);
  return out;
}

ScaleFreeResult scale_free_metric(const CallGraph& g) {
  const CallGraph u = symmetrize(g);
  if (u.m() == 0) throw PreconditionError("scale-free metric of an edgeless graph");
  Int128 s = 0;
  Int128 cubes = 0;
  for (NodeId v = 0; v < u.n(); ++v) {
    const Int128 dv = u.out_degree(v);
    cubes += dv * dv * dv;
    for (NodeId w : u.successors(v)) {
      if (v < w) s += dv * static_cast<Int128>(u.out_degree(w));
    }
  }
  ScaleFreeResult out;
  out.s = static_cast<double>(s);
  out.s_max = static_cast<double>(cubes) / 2.0;
  out.S = static_cast<double>(2 * s) / static_cast<double>(cubes);
  return out;
}

ClusteringResult clustering(const CallGraph& g) {
  const CallGraph u = symmetrize(g);
  ClusteringResult out;
  out.per_node.resize(u.n());
  CompensatedSum total;
  std::size_t defined = 0;
  std::map<std::uint64_t, std::pair<CompensatedSum, std::size_t>> groups;
  for (NodeId v = 0; v < u.n(); ++v) {
    const std::uint64_t k = u.out_degree(v);
    if (k < 2) continue;
    const double c = static_cast<double>(neighbour_edges(u, v)) / static_cast<double>(choose2(k));
    out.per_node[v] = c;
    total.add(c);
    ++defined;
    auto& [sum, count] = groups[k];
    sum.add(c);
    ++count;
  }
  if (defined > 0) out.global_c = total.value() / static_cast<double>(defined);
  for (const auto& [k, group] : groups) {
    out.by_degree[k] = group.first.value() / static_cast<double>(group.second);
  }
  return out;
}

ClusteringSlope clustering_by_degree_fit(const std::map<std::uint64_t, double>& by_degree) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& [k, c] : by_degree) {
    if (k > 0 && c > 0.0) pts.emplace_back(std::log(static_cast<double>(k)), std::log(c));
  }
  if (pts.size() < 3) {
    throw InsufficientDataError("clustering-by-degree fit needs >= 3 positive points, have " +
                                std::to_string(pts.size()));
  }
  const double n = static_cast<double>(pts.size());
  double mx = 0.0, my = 0.0;
  for (auto [x, y] : pts) {
    mx += x;
    my += y;
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (auto [x, y] : pts) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
  }
  ClusteringSlope out;
  out.points = pts.size();
  out.slope = sxy / sxx;
  out.intercept = my - out.slope * mx;
  double ss = 0.0;
  for (auto [x, y] : pts) {
    const double r = y - (out.intercept + out.slope * x);
    ss += r * r;
  }
  out.residual = std::sqrt(ss / n);
  return out;
}

ClusteringProfile clustering_profile(const CallGraph& g, std::size_t d_max) {
  if (d_max < 1) throw RangeError("clustering profile needs d_max >= 1");
  const CallGraph u = symmetrize(g);
  const ArcIndex arcs(u);
  const auto blocks = arc_blocks(u, arcs);

  std::vector<NodeId> centres;
  for (NodeId v = 0; v < u.n(); ++v) {
    if (u.out_degree(v) >= 2) centres.push_back(v);
  }

  ClusteringProfile out;
  out.d_max = d_max;
  out.eligible_nodes = centres.size();
  out.per_node.resize(centres.size());
  const std::size_t chunks = std::min<std::size_t>(64, std::max<std::size_t>(1, centres.size()));
  parallel_chunks(chunks, [&](std::size_t c) {
    const ChunkRange r = chunk_range(centres.size(), chunks, c);
    BfsScratch scratch(u.n());
    for (std::size_t i = r.begin; i < r.end; ++i) {
      out.per_node[i] = profile_node(u, arcs, blocks, centres[i], d_max, scratch);
    }
  });

  // Reductions run sequentially in node order.
  out.cell.assign(d_max, {});
  out.aggregate.assign(d_max, 0.0);
  std::vector<CompensatedSum> agg(d_max);
  CompensatedSum beyond, disconnected;
  std::map<std::uint64_t, std::pair<std::vector<CompensatedSum>, std::size_t>> groups;
  for (const NodeProfile& p : out.per_node) {
    const auto total = static_cast<double>(p.total_pairs);
    auto& [sums, count] = groups[p.degree];
    if (sums.empty()) sums.resize(d_max);
    ++count;
    for (std::size_t d = 0; d < d_max; ++d) {
      const double frac = static_cast<double>(p.pairs[d]) / total;
      sums[d].add(frac);
      agg[d].add(frac);
    }
    beyond.add(static_cast<double>(p.beyond) / total);
    disconnected.add(static_cast<double>(p.disconnected) / total);
  }
  if (!out.per_node.empty()) {
    const auto eligible = static_cast<double>(out.per_node.size());
    for (std::size_t d = 0; d < d_max; ++d) out.aggregate[d] = agg[d].value() / eligible;
    out.beyond_aggregate = beyond.value() / eligible;
    out.disconnected_aggregate = disconnected.value() / eligible;
  }
  for (const auto& [k, group] : groups) {
    for (std::size_t d = 0; d < d_max; ++d) {
      out.cell[d][k] = group.first[d].value() / static_cast<double>(group.second);
    }
  }
  return out;
}

ReciprocityResult reciprocity(const CallGraph& g) {
  if (!g.directed()) throw PreconditionError("reciprocity needs a directed graph");
  if (g.n() < 2 || g.m() == 0) throw PreconditionError("reciprocity needs n >= 2 and m >= 1");
  std::uint64_t mutual = 0;
  for (NodeId v = 0; v < g.n(); ++v) {
    for (NodeId w : g.successors(v)) mutual += g.has_edge(w, v) ? 1 : 0;
  }
  const Int128 m = static_cast<Int128>(g.m());
  const Int128 pairs = static_cast<Int128>(g.n()) * static_cast<Int128>(g.n() - 1);
  ReciprocityResult out;
  out.reciprocal_arcs = mutual;
  out.varrho = static_cast<double>(mutual) / static_cast<double>(g.m());
  out.a_bar = static_cast<double>(m) / static_cast<double>(pairs);
  if (pairs != m) {
    const Int128 num = static_cast<Int128>(mutual) * pairs - m * m;
    const Int128 den = m * (pairs - m);
    out.rho = static_cast<double>(num) / static_cast<double>(den);
  }
  return out;
}

const char* to_string(AssortativityMode mode) {
  switch (mode) {
    case AssortativityMode::kInIn: return "in_in";
    case AssortativityMode::kOutOut: return "out_out";
    case AssortativityMode::kTotal: return "total";
  }
  return "?";
}

}  // namespace cgm
