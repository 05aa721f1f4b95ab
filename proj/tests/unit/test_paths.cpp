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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "cgm/errors.hpp"
#include "cgm/generators.hpp"
#include "cgm/io.hpp"
#include "cgm/parallel.hpp"
#include "cgm/paths.hpp"
#include "cgm/random.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cgm;
using namespace cgm::fixtures;

TEST_CASE("harmonic geodesic mean examples") {
  CHECK(*harmonic_geodesic_mean(complete(4), true).harmonic_mean_ell == 1.0);
  const GeodesicSummary c = harmonic_geodesic_mean(chain(3), true);
  CHECK(c.inverse_distance_sum == 2.5);
  CHECK(std::fabs(*c.harmonic_mean_ell - 2.4) <= 1e-12);
  CHECK(std::fabs(*c.ell_n_plus_one - 12.0 / 2.5) <= 1e-12);
  CHECK(c.reachable_pair_fraction == doctest::Approx(0.5));

  const CallGraph pairs = load_edge_list("a b\nb a\nc d\nd c\n");
  const GeodesicSummary p = harmonic_geodesic_mean(pairs);
  CHECK(*p.harmonic_mean_ell == 3.0);
  CHECK(p.reachable_pair_fraction == doctest::Approx(4.0 / 12.0));

  CHECK_FALSE(harmonic_geodesic_mean(CallGraph::from_edges({"a", "b", "c"}, {})).harmonic_mean_ell.has_value());
  CHECK_THROWS_AS(harmonic_geodesic_mean(CallGraph::from_edges({"a"}, {})), PreconditionError);
}

TEST_CASE("harmonic geodesic mean against Floyd-Warshall") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const CallGraph g = oracle::random_digraph(2 + seed % 20, 0.15, 40 + seed);
    for (bool directed : {false, true}) {
      const auto expected = oracle::harmonic_ell(g, !directed);
      const auto got = harmonic_geodesic_mean(g, directed).harmonic_mean_ell;
      REQUIRE(got.has_value() == expected.has_value());
      if (got) {
        CHECK(std::fabs(*got - *expected) <= 1e-12 * *expected);
        CHECK(*got >= 1.0);
      }
    }
  }
}

TEST_CASE("property: adding an edge never increases the geodesic mean") {
  Rng rng(8);
  int checked = 0;
  for (std::uint64_t seed = 0; checked < 50; ++seed) {
    const CallGraph g = oracle::random_digraph(10, 0.15, 2000 + seed);
    NodeId a = static_cast<NodeId>(rng.below(10)), b = static_cast<NodeId>(rng.below(10));
    if (a == b || g.has_edge(a, b)) continue;
    auto edges = g.edges();
    edges.push_back({a, b});
    const CallGraph h = CallGraph::from_edges(g.names(), edges);
    for (bool directed : {false, true}) {
      const auto before = harmonic_geodesic_mean(g, directed);
      const auto after = harmonic_geodesic_mean(h, directed);
      CHECK(after.inverse_distance_sum >= before.inverse_distance_sum);
      if (before.harmonic_mean_ell) CHECK(*after.harmonic_mean_ell <= *before.harmonic_mean_ell);
    }
    ++checked;
  }
}

TEST_CASE("betweenness examples") {
  CHECK(betweenness(chain(3)).per_node == std::vector<double>{0.0, 1.0, 0.0});
  const CallGraph rs = reciprocal_star(4);
  CHECK(betweenness(rs).per_node[*rs.find("h")] == 12.0);
  const CallGraph diamond = load_edge_list("a b\na c\nb d\nc d\n");
  const auto b = betweenness(diamond).per_node;
  CHECK(b[*diamond.find("b")] == 0.5);
  CHECK(b[*diamond.find("c")] == 0.5);
  CHECK(b[*diamond.find("a")] == 0.0);
}

TEST_CASE("betweenness against geodesic enumeration") {
  Rng rng(1);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 3 + rng.below(6);
    const CallGraph g = oracle::random_digraph(n, 0.1 + 0.5 * rng.uniform(), 10000 + seed);
    const auto expected = oracle::betweenness(g);
    const auto got = betweenness(g).per_node;
    for (std::size_t v = 0; v < n; ++v) CHECK(std::fabs(got[v] - expected[v]) <= 1e-9);
    const double total = std::accumulate(got.begin(), got.end(), 0.0);
    CHECK(std::fabs(total - oracle::betweenness_mass(g)) <= 1e-9);
  }
}

TEST_CASE("betweenness distribution") {
  const BetweennessDistribution zero = betweenness(directed_cycle(2)).distribution;
  CHECK(zero.zero_count == 2);
  CHECK(zero.buckets.empty());
  CHECK(zero.ccdf.empty());

  const BetweennessDistribution c = betweenness(chain(3)).distribution;
  CHECK(c.zero_count == 2);
  CHECK(c.ccdf == std::vector<ValueCcdfPoint>{{1.0, 0.0}});
  REQUIRE(c.buckets.size() == 1);
  CHECK(c.buckets[0].lower == 1.0);
  CHECK(c.buckets[0].count == 1);

  const CallGraph g = generate_random({RandomModel::kErdosRenyiGnm, 500, 2500, 2.5, 5});
  const BetweennessResult r = betweenness(g);
  std::size_t mass = r.distribution.zero_count;
  for (const auto& h : r.distribution.buckets) {
    mass += h.count;
    for (double v : r.per_node)
      if (v >= h.lower && v < 2 * h.lower && v > 0) CHECK(h.count > 0);
  }
  CHECK(mass == g.n());
  std::vector<double> positive;
  for (double v : r.per_node)
    if (v > 0) positive.push_back(v);
  std::sort(positive.begin(), positive.end());
  for (std::size_t i = 0; i < r.distribution.ccdf.size(); ++i) {
    const auto& p = r.distribution.ccdf[i];
    const auto greater = positive.end() - std::upper_bound(positive.begin(), positive.end(), p.value);
    CHECK(p.ccdf == static_cast<double>(greater) / static_cast<double>(positive.size()));
    if (i > 0) CHECK(p.ccdf <= r.distribution.ccdf[i - 1].ccdf);
  }
}

TEST_CASE("betweenness is identical across thread counts") {
  const CallGraph g = generate_random({RandomModel::kErasedConfiguration, 800, 0, 2.3, 12});
  set_thread_count(1);
  const BetweennessResult one = betweenness(g);
  set_thread_count(4);
  const BetweennessResult four = betweenness(g);
  set_thread_count(0);
  CHECK(one == four);
}

TEST_CASE("component statistics examples") {
  const ComponentStats a = component_stats(load_edge_list("a b\nb a\na c\n"));
  CHECK(a.wcc_count == 1);
  CHECK(a.scc_count == 2);
  CHECK(a.scc_nontrivial_count == 1);
  CHECK(a.largest_scc_fraction == doctest::Approx(2.0 / 3.0));

  const ComponentStats c = component_stats(chain(5));
  CHECK(c.scc_count == 5);
  CHECK(c.scc_nontrivial_count == 0);
  CHECK(c.largest_scc_fraction == 0.2);

  const ComponentStats two = component_stats(load_edge_list("a b\nb c\nc a\nx y\ny z\nz x\n"));
  CHECK(two.wcc_count == 2);
  CHECK(two.scc_count == 2);
  CHECK(two.largest_scc_fraction == 0.5);
  CHECK(two.largest_wcc_size == 3);
}

TEST_CASE("SCC partitions against mutual reachability") {
  Rng rng(2);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t n = 1 + rng.below(50);
    const CallGraph g = oracle::random_digraph(n, 2.0 / static_cast<double>(n), 20000 + seed);
    std::size_t count = 0;
    const auto labels = strong_component_labels(g, &count);
    CHECK(oracle::canonical_partition(labels) == oracle::scc_min_labels(g));
    CHECK(std::set<std::size_t>(labels.begin(), labels.end()).size() == count);

    const ComponentStats s = component_stats(g);
    CHECK(s.scc_count == count);
    CHECK(s.scc_count >= s.wcc_count);
    CHECK(s.largest_scc_size <= s.largest_wcc_size);
    CHECK(s.largest_wcc_size <= n);
    // Every nontrivial SCC contains an arc between two of its members.
    std::vector<std::size_t> size(count, 0);
    for (auto l : labels) ++size[l];
    std::vector<bool> has_arc(count, false);
    for (const Edge& e : g.edges())
      if (labels[e.source] == labels[e.target]) has_arc[labels[e.source]] = true;
    std::size_t nontrivial = 0;
    for (std::size_t l = 0; l < count; ++l) {
      if (size[l] >= 2) {
        ++nontrivial;
        CHECK(has_arc[l]);
      }
    }
    CHECK(nontrivial == s.scc_nontrivial_count);
    CHECK(std::accumulate(size.begin(), size.end(), std::size_t{0}) == n);
  }
}
