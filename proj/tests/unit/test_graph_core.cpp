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
#include <queue>
#include <set>

#include "cgm/errors.hpp"
#include "cgm/generators.hpp"
#include "cgm/graph.hpp"
#include "cgm/io.hpp"
#include "cgm/transform.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cgm;
using namespace cgm::fixtures;

namespace {

std::set<std::pair<std::string, std::string>> named_edges(const CallGraph& g) {
  std::set<std::pair<std::string, std::string>> out;
  for (const Edge& e : g.edges()) out.emplace(g.name(e.source), g.name(e.target));
  return out;
}

bool transpose_consistent(const CallGraph& g) {
  std::size_t out_total = 0, in_total = 0;
  for (NodeId v = 0; v < g.n(); ++v) {
    out_total += g.out_degree(v);
    in_total += g.in_degree(v);
    for (NodeId w : g.successors(v)) {
      auto preds = g.predecessors(w);
      if (!std::binary_search(preds.begin(), preds.end(), v)) return false;
    }
  }
  const std::size_t arcs = g.directed() ? g.m() : 2 * g.m();
  return out_total == arcs && in_total == arcs;
}

bool weakly_connected(const CallGraph& g) {
  if (g.n() == 0) return true;
  const CallGraph u = symmetrize(g);
  std::vector<bool> seen(u.n(), false);
  std::queue<NodeId> q;
  q.push(0);
  seen[0] = true;
  std::size_t count = 1;
  while (!q.empty()) {
    NodeId v = q.front();
    q.pop();
    for (NodeId w : u.successors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        q.push(w);
      }
    }
  }
  return count == u.n();
}

}  // namespace

TEST_CASE("edge list canonicalizes duplicates and self-loops") {
  const CallGraph g = load_edge_list("a b\na b\na a\nb c");
  CHECK(g.n() == 3);
  CHECK(g.m() == 2);
  CHECK(named_edges(g) == std::set<std::pair<std::string, std::string>>{{"a", "b"}, {"b", "c"}});
  CHECK(g.ingest_stats().self_loops_dropped == 1);
  CHECK(g.ingest_stats().duplicates_dropped == 1);
  CHECK(g.name(0) == "a");
  CHECK(g.name(2) == "c");
}

TEST_CASE("reciprocal edges stay distinct") {
  const CallGraph g = load_edge_list("f g\ng f");
  CHECK(g.n() == 2);
  CHECK(g.m() == 2);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 0));
}

TEST_CASE("edge list comments, blank lines and malformed lines") {
  const CallGraph g = load_edge_list("# header\n\n  \na b\n#x y\n");
  CHECK(g.n() == 2);
  CHECK(g.m() == 1);
  try {
    load_edge_list("a b\nb c\nbroken line here\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK_THROWS_AS(load_edge_list("lonely\n"), ParseError);
  CHECK_THROWS_AS(load_edge_list("# nothing\n"), InputError);
  CHECK_THROWS_AS(load_edge_list(""), InputError);
}

TEST_CASE("DOT subset") {
  const CallGraph g = load_dot_subset("digraph g { a -> b; b -> c; }");
  CHECK(named_edges(g) == std::set<std::pair<std::string, std::string>>{{"a", "b"}, {"b", "c"}});

  const CallGraph q = load_dot_subset("digraph g { \"x y\" -> z [weight=2]; }");
  CHECK(q.m() == 1);
  CHECK(named_edges(q) == std::set<std::pair<std::string, std::string>>{{"x y", "z"}});

  const CallGraph chain = load_dot_subset(
      "// comment\ndigraph \"calls\" {\n  node [shape=box];\n  a -> b -> c;\n  a -> a;\n}\n");
  CHECK(chain.m() == 2);
  CHECK(chain.ingest_stats().self_loops_dropped == 1);

  try {
    load_dot_subset("graph g { a -- b; }");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("undirected edge") != std::string::npos);
  }
  try {
    load_dot_subset("digraph g { a -- b; }");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("undirected edge") != std::string::npos);
  }
  try {
    load_dot_subset("digraph g { subgraph cluster0 { a -> b; } }");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("subgraph") != std::string::npos);
  }
  CHECK_THROWS_AS(load_dot_subset("digraph g { a -> ; }"), ParseError);
  CHECK_THROWS_AS(load_dot_subset("digraph g { }"), InputError);
}

TEST_CASE("symmetrize") {
  const CallGraph g = load_edge_list("a b\nb a\nb c");
  const CallGraph u = symmetrize(g);
  CHECK_FALSE(u.directed());
  CHECK(u.m() == 2);
  CHECK(u.has_edge(1, 0));
  CHECK(u.has_edge(2, 1));
  CHECK(symmetrize(u) == u);

  const CallGraph tri = symmetrize(directed_cycle(3));
  CHECK(tri.m() == 3);
  for (NodeId v = 0; v < 3; ++v) CHECK(tri.out_degree(v) == 2);

  const CallGraph empty = symmetrize(CallGraph::from_edges({"a", "b", "c", "d"}, {}));
  CHECK(empty.n() == 4);
  CHECK(empty.m() == 0);
}

TEST_CASE("largest weakly connected component") {
  const CallGraph g = CallGraph::from_edges({"a", "b", "c"}, {{0, 1}});
  const CallGraph w = largest_wcc(g);
  CHECK(w.n() == 2);
  CHECK(w.names() == std::vector<std::string>{"a", "b"});

  const CallGraph two = load_edge_list("p q\nx y\ny z\n");
  const CallGraph big = largest_wcc(two);
  CHECK(big.n() == 3);
  CHECK(big.find("x").has_value());

  // Equal sizes: the component holding the smallest id wins.
  const CallGraph tie = load_edge_list("p q\nx y\n");
  CHECK(largest_wcc(tie).find("p").has_value());

  const CallGraph connected = load_edge_list("a b\nb c\nc a\n");
  CHECK(largest_wcc(connected) == connected);
}

TEST_CASE("gnm generator") {
  RandomGraphSpec full{RandomModel::kErdosRenyiGnm, 10, 90, 2.5, 7};
  const CallGraph g = generate_random(full);
  CHECK(g.m() == 90);
  for (NodeId i = 0; i < 10; ++i)
    for (NodeId j = 0; j < 10; ++j)
      if (i != j) CHECK(g.has_edge(i, j));

  RandomGraphSpec big{RandomModel::kErdosRenyiGnm, 1000, 5000, 2.5, 11};
  CHECK(generate_random(big) == generate_random(big));
  big.seed = 12;
  CHECK_FALSE(generate_random(big) == generate_random(RandomGraphSpec{
                                          RandomModel::kErdosRenyiGnm, 1000, 5000, 2.5, 11}));

  CHECK_THROWS_AS(generate_random({RandomModel::kErdosRenyiGnm, 10, 91, 2.5, 1}), SpecError);
  CHECK_THROWS_AS(generate_random({RandomModel::kErdosRenyiGnm, 1, 0, 2.5, 1}), SpecError);
  CHECK_THROWS_AS(generate_random({RandomModel::kErasedConfiguration, 10, 10, 1.0, 1}), SpecError);
}

TEST_CASE("property: gnm has exactly m simple arcs for 100 seeds") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const CallGraph g = generate_random({RandomModel::kErdosRenyiGnm, 50, 200, 2.5, seed});
    REQUIRE(g.m() == 200);
    const auto edges = g.edges();
    std::set<Edge> unique(edges.begin(), edges.end());
    REQUIRE(unique.size() == 200);
    for (const Edge& e : edges) REQUIRE(e.source != e.target);
  }
}

TEST_CASE("configuration generator is simple and deterministic") {
  RandomGraphSpec spec{RandomModel::kErasedConfiguration, 2000, 0, 2.5, 3};
  const CallGraph g = generate_random(spec);
  CHECK(g.n() == 2000);
  CHECK(g == generate_random(spec));
  CHECK(transpose_consistent(g));
  for (const Edge& e : g.edges()) CHECK(e.source != e.target);
}

TEST_CASE("property: serialization round trip, transpose, idempotence, connectivity") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const CallGraph raw = oracle::random_digraph(3 + seed % 17, 0.15, seed);
    if (raw.m() == 0) continue;
    const CallGraph g = load_edge_list(write_edge_list(largest_wcc(raw)));
    CHECK(load_edge_list(write_edge_list(g)) == g);
    CHECK(transpose_consistent(g));
    CHECK(transpose_consistent(symmetrize(g)));
    CHECK(symmetrize(symmetrize(g)) == symmetrize(g));
    CHECK(weakly_connected(largest_wcc(raw)));
    const CallGraph u = symmetrize(raw);
    for (const Edge& e : u.edges()) CHECK(u.has_edge(e.target, e.source));
  }
}

TEST_CASE("manifest parsing and count validation") {
  const auto entries = parse_manifest(
      "# label\tlanguage\tdomain\tpath\n"
      "tri\tC\tdemo\ttri.txt\n"
      "big\tC\tOS kernel\t/abs/big.txt\t3\t2\n",
      "/base");
  REQUIRE(entries.size() == 2);
  CHECK(entries[0].path == std::filesystem::path("/base/tri.txt"));
  CHECK_FALSE(entries[0].expected_n.has_value());
  CHECK(entries[1].domain == "OS kernel");
  CHECK(entries[1].path == std::filesystem::path("/abs/big.txt"));
  CHECK(*entries[1].expected_m == 2);

  const CallGraph g = load_edge_list("a b\nb c\n");
  CHECK_NOTHROW(validate_counts(entries[1], g));
  CorpusEntry wrong = entries[1];
  wrong.expected_m = 3;
  CHECK_THROWS_AS(validate_counts(wrong, g), ValidationError);

  CHECK_THROWS_AS(parse_manifest("only\tthree\tfields\n"), ParseError);
  CHECK_THROWS_AS(parse_manifest("a\tb\tc\td\t1\n"), ParseError);
  CHECK_THROWS_AS(parse_manifest("a\tb\tc\td\tx\ty\n"), ParseError);
}

TEST_CASE("fixtures") {
  const CallGraph s = star(4);
  CHECK(s.n() == 5);
  CHECK(s.m() == 4);
  CHECK(s.out_degree(*s.find("h")) == 4);
  CHECK(reciprocal_star(4).m() == 8);
  CHECK(directed_cycle(5).m() == 5);
  CHECK(chain(5).m() == 4);
  CHECK(complete(4).m() == 12);
  const CallGraph bt = bridged_triangles(10);
  CHECK(bt.n() == 30);
  CHECK(weakly_connected(bt));
  CHECK(weakly_connected(hierarchical(3)));
  CHECK(hierarchical(3).n() == 125);
}
