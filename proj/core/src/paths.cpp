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

#include "cgm/paths.hpp"

#include <algorithm>
#include <cmath>

#include "cgm/errors.hpp"
#include "cgm/parallel.hpp"
#include "cgm/transform.hpp"

namespace cgm {
namespace {

constexpr std::size_t kMaxChunks = 64;

std::size_t chunk_count(std::size_t items) {
  return std::max<std::size_t>(1, std::min(kMaxChunks, items));
}

}  // namespace

GeodesicSummary harmonic_geodesic_mean(const CallGraph& g, bool directed) {
  if (g.n() < 2) throw PreconditionError("geodesic mean needs n >= 2");
  const CallGraph view = directed || !g.directed() ? g : symmetrize(g);
  const std::size_t n = view.n();
  const std::size_t chunks = chunk_count(n);

  // Per-chunk histograms of finite distances; integer counts reduce exactly.
  std::vector<std::vector<std::uint64_t>> histograms(chunks);
  parallel_chunks(chunks, [&](std::size_t c) {
    const ChunkRange r = chunk_range(n, chunks, c);
    std::vector<std::uint32_t> dist(n);
    std::vector<NodeId> queue(n);
    auto& hist = histograms[c];
    constexpr std::uint32_t kUnreached = static_cast<std::uint32_t>(-1);
    for (std::size_t s = r.begin; s < r.end; ++s) {
      std::fill(dist.begin(), dist.end(), kUnreached);
      dist[s] = 0;
      std::size_t head = 0, tail = 0;
      queue[tail++] = static_cast<NodeId>(s);
      while (head < tail) {
        const NodeId x = queue[head++];
        for (NodeId y : view.successors(x)) {
          if (dist[y] != kUnreached) continue;
          dist[y] = dist[x] + 1;
          if (hist.size() <= dist[y]) hist.resize(dist[y] + 1, 0);
          ++hist[dist[y]];
          queue[tail++] = y;
        }
      }
    }
  });
  std::vector<std::uint64_t> hist;
  for (const auto& h : histograms) {
    if (hist.size() < h.size()) hist.resize(h.size(), 0);
    for (std::size_t d = 0; d < h.size(); ++d) hist[d] += h[d];
  }

  GeodesicSummary out;
  out.directed = directed;
  CompensatedSum inverse;
  std::uint64_t reachable = 0;
  for (std::size_t d = 1; d < hist.size(); ++d) {
    inverse.add(static_cast<double>(hist[d]) / static_cast<double>(d));
    reachable += hist[d];
  }
  const double ordered_pairs = static_cast<double>(n) * static_cast<double>(n - 1);
  out.inverse_distance_sum = inverse.value();
  out.reachable_pair_fraction = static_cast<double>(reachable) / ordered_pairs;
  if (reachable > 0) {
    out.harmonic_mean_ell = ordered_pairs / out.inverse_distance_sum;
    out.ell_n_plus_one =
        static_cast<double>(n) * static_cast<double>(n + 1) / out.inverse_distance_sum;
  }
  return out;
}

BetweennessResult betweenness(const CallGraph& g) {
  const std::size_t n = g.n();
  const std::size_t chunks = chunk_count(n);
  std::vector<std::vector<double>> partial(chunks);

  parallel_chunks(chunks, [&](std::size_t c) {
    const ChunkRange r = chunk_range(n, chunks, c);
    auto& acc = partial[c];
    acc.assign(n, 0.0);
    std::vector<double> sigma(n), delta(n);
    std::vector<std::int64_t> dist(n);
    std::vector<NodeId> order;
    order.reserve(n);
    for (std::size_t s = r.begin; s < r.end; ++s) {
      std::fill(sigma.begin(), sigma.end(), 0.0);
      std::fill(delta.begin(), delta.end(), 0.0);
      std::fill(dist.begin(), dist.end(), -1);
      order.clear();
      sigma[s] = 1.0;
      dist[s] = 0;
      order.push_back(static_cast<NodeId>(s));
      for (std::size_t head = 0; head < order.size(); ++head) {
        const NodeId x = order[head];
        for (NodeId y : g.successors(x)) {
          if (dist[y] < 0) {
            dist[y] = dist[x] + 1;
            order.push_back(y);
          }
          if (dist[y] == dist[x] + 1) sigma[y] += sigma[x];
        }
      }
      // Dependencies in reverse BFS order; predecessors are recovered from
      // the in-adjacency instead of stored lists.
      for (std::size_t i = order.size(); i-- > 1;) {
        const NodeId w = order[i];
        const double share = (1.0 + delta[w]) / sigma[w];
        for (NodeId v : g.predecessors(w)) {
          if (dist[v] >= 0 && dist[v] + 1 == dist[w]) delta[v] += sigma[v] * share;
        }
        acc[w] += delta[w];
      }
    }
  });

  BetweennessResult out;
  out.per_node.assign(n, 0.0);
  for (const auto& acc : partial) {
    for (std::size_t v = 0; v < n; ++v) out.per_node[v] += acc[v];
  }
  out.distribution = betweenness_distribution(out.per_node);
  return out;
}

BetweennessDistribution betweenness_distribution(const std::vector<double>& values) {
  BetweennessDistribution out;
  std::vector<double> positive;
  for (double v : values) {
    if (v > 0.0) {
      positive.push_back(v);
    } else {
      ++out.zero_count;
    }
  }
  if (positive.empty()) return out;
  std::sort(positive.begin(), positive.end());

  auto exponent = [](double v) {
    int e = 0;
    std::frexp(v, &e);  // v = f * 2^e, f in [0.5, 1)
    return e - 1;
  };
  const int lo = exponent(positive.front());
  const int hi = exponent(positive.back());
  out.buckets.resize(static_cast<std::size_t>(hi - lo + 1));
  for (int e = lo; e <= hi; ++e) out.buckets[static_cast<std::size_t>(e - lo)].lower = std::ldexp(1.0, e);
  for (double v : positive) ++out.buckets[static_cast<std::size_t>(exponent(v) - lo)].count;

  const double total = static_cast<double>(positive.size());
  for (std::size_t i = 0; i < positive.size();) {
    std::size_t j = i;
    while (j < positive.size() && positive[j] == positive[i]) ++j;
    out.ccdf.push_back({positive[i], static_cast<double>(positive.size() - j) / total});
    i = j;
  }
  return out;
}

std::vector<std::size_t> strong_component_labels(const CallGraph& g, std::size_t* count) {
  const std::size_t n = g.n();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnset), low(n, 0), label(n, kUnset);
  std::vector<bool> on_stack(n, false);
  std::vector<NodeId> stack;
  struct Frame {
    NodeId v;
    std::size_t next;
  };
  std::vector<Frame> frames;
  std::size_t counter = 0;
  std::size_t components = 0;

  for (NodeId root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    frames.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      auto succ = g.successors(f.v);
      if (f.next < succ.size()) {
        const NodeId w = succ[f.next++];
        if (index[w] == kUnset) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      const NodeId v = f.v;
      frames.pop_back();
      if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
      if (low[v] == index[v]) {
        while (true) {
          const NodeId w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          label[w] = components;
          if (w == v) break;
        }
        ++components;
      }
    }
  }
  if (count != nullptr) *count = components;
  return label;
}

ComponentStats component_stats(const CallGraph& g) {
  if (g.n() == 0) throw PreconditionError("component statistics of an empty graph");
  ComponentStats out;
  const auto wcc = weak_component_labels(g, &out.wcc_count);
  const auto scc = strong_component_labels(g, &out.scc_count);
  std::vector<std::size_t> wcc_size(out.wcc_count, 0), scc_size(out.scc_count, 0);
  for (NodeId v = 0; v < g.n(); ++v) {
    ++wcc_size[wcc[v]];
    ++scc_size[scc[v]];
  }
  out.largest_wcc_size = *std::max_element(wcc_size.begin(), wcc_size.end());
  out.largest_scc_size = *std::max_element(scc_size.begin(), scc_size.end());
  out.scc_nontrivial_count = static_cast<std::size_t>(
      std::count_if(scc_size.begin(), scc_size.end(), [](std::size_t s) { return s >= 2; }));
  out.largest_scc_fraction =
      static_cast<double>(out.largest_scc_size) / static_cast<double>(g.n());
  return out;
}

}  // namespace cgm
