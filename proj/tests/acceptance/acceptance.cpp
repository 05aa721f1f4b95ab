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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "cgm/cgm.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace cgm;
using cgm::testing::fixture;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double time_limit_s;  // 0 = none
  std::function<Outcome()> run;
};

bool close(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(6);
  s << v;
  return s.str();
}

Outcome betweenness_oracle() {
  Rng rng(0xacce5501);
  double worst = 0.0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    const std::size_t n = 1 + rng.below(8);
    const CallGraph g = oracle::random_digraph(n, 0.1 + 0.6 * rng.uniform(), 50000 + i);
    const auto expected = oracle::betweenness(g);
    const auto got = betweenness(g).per_node;
    for (std::size_t v = 0; v < n; ++v) worst = std::max(worst, std::fabs(got[v] - expected[v]));
  }
  return {worst <= 1e-9, "max abs error " + fmt(worst) + " over 200 graphs"};
}

Outcome scc_oracle() {
  Rng rng(0xacce5502);
  int mismatches = 0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    const std::size_t n = 1 + rng.below(50);
    const CallGraph g = oracle::random_digraph(n, 2.5 * rng.uniform() / static_cast<double>(n), 60000 + i);
    if (oracle::canonical_partition(strong_component_labels(g)) != oracle::scc_min_labels(g)) ++mismatches;
  }
  return {mismatches == 0, std::to_string(mismatches) + " mismatched partitions of 100"};
}

Outcome spectral_oracle() {
  using namespace cgm::fixtures;
  std::vector<CallGraph> graphs = {load_graph_file(fixture("triangle.txt"), InputFormat::kEdgeList),
                                   load_graph_file(fixture("modules.dot"), InputFormat::kDot)};
  for (std::size_t k = 2; k <= 19; ++k) {
    graphs.push_back(star(k));
    graphs.push_back(reciprocal_star(k));
    graphs.push_back(chain(k + 1));
    graphs.push_back(directed_cycle(k + 1));
  }
  for (std::size_t k = 2; k <= 20; ++k) graphs.push_back(complete(k));
  for (std::size_t k = 1; k <= 6; ++k) graphs.push_back(bridged_triangles(k));
  graphs.push_back(hierarchical(1));
  double worst = 0.0;
  std::size_t checked = 0;
  for (const CallGraph& raw : graphs) {
    const CallGraph g = largest_wcc(raw);
    if (g.n() > 20 || g.m() == 0) continue;
    worst = std::max(worst, std::fabs(spectral_radius(g).lambda1 - oracle::dense_lambda1(g)));
    ++checked;
  }
  bool closed = true;
  for (std::size_t leaves : {1, 4, 9, 50, 100}) {
    closed &= close(spectral_radius(star(leaves)).lambda1, std::sqrt(static_cast<double>(leaves)), 1e-6);
  }
  for (std::size_t n : {2, 5, 10, 30}) {
    closed &= close(spectral_radius(complete(n)).lambda1, static_cast<double>(n - 1), 1e-6);
  }
  return {worst <= 1e-6 && closed, std::to_string(checked) + " graphs, max deviation " + fmt(worst) +
                                       (closed ? ", closed forms ok" : ", closed forms FAILED")};
}

Outcome power_law_mle() {
  int in_band = 0, pl_verdicts = 0, geo_verdicts = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    DegreeSequence s{DegreeMode::kIn, oracle::power_law_samples(2.5, 1, 100000, 880000 + seed)};
    const PowerLawFit pl = fit_power_law(s);
    if (pl.gamma >= 2.4 && pl.gamma <= 2.6) ++in_band;
    const FitComparison c = compare_fits(pl, fit_exponential(s, pl.x_min), s);
    if (c.verdict == FitVerdict::kPowerLaw) ++pl_verdicts;

    // Geometric data is compared over its full support.
    DegreeSequence q{DegreeMode::kIn, oracle::geometric_samples(0.3, 1, 100000, 990000 + seed)};
    const FitComparison cq = compare_fits(fit_power_law_at(q, 1), fit_exponential(q, 1), q);
    if (cq.verdict == FitVerdict::kExponential) ++geo_verdicts;
  }
  return {in_band >= 48 && pl_verdicts >= 48 && geo_verdicts >= 48,
          "gamma in band " + std::to_string(in_band) + "/50, power-law verdicts " +
              std::to_string(pl_verdicts) + "/50, geometric verdicts " + std::to_string(geo_verdicts) + "/50"};
}

Outcome closed_forms() {
  using namespace cgm::fixtures;
  struct Check {
    const char* what;
    double got;
    double want;
  };
  const auto ell = [](const CallGraph& g, bool directed) {
    return harmonic_geodesic_mean(g, directed).harmonic_mean_ell.value_or(NAN);
  };
  const std::vector<Check> checks = {
      {"S(cycle)", scale_free_metric(directed_cycle(5)).S, 1.0},
      {"S(P3)", scale_free_metric(chain(3)).S, 0.8},
      {"S(star 3)", scale_free_metric(star(3)).S, 0.6},
      {"assortativity(star, total)", assortativity(star(6), AssortativityMode::kTotal).rho.value_or(NAN), -1.0},
      {"reciprocity(a<->b, a->c)", reciprocity(load_edge_list("a b\nb a\na c\n")).rho.value_or(NAN), 1.0 / 3.0},
      {"reciprocity(3-cycle)", reciprocity(directed_cycle(3)).rho.value_or(NAN), -1.0},
      {"ell(K4)", ell(complete(4), false), 1.0},
      {"ell(a->b->c)", ell(load_edge_list("a b\nb c\n"), true), 2.4},
  };
  std::string failed;
  for (const Check& c : checks)
    if (!close(c.got, c.want, 1e-12)) failed += std::string(" ") + c.what + "=" + fmt(c.got);
  return {failed.empty(), failed.empty() ? "8 identities exact to 1e-12" : "off:" + failed};
}

Outcome profile_identity() {
  int bad_cells = 0, bad_mass = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const CallGraph g = generate_random({RandomModel::kErdosRenyiGnm, 60, 240, 2.5, 770000 + seed});
    const ClusteringProfile p = clustering_profile(g, 4);
    const ClusteringResult c = clustering(g);
    if (p.cell[0] != c.by_degree) ++bad_cells;
    for (const NodeProfile& np : p.per_node) {
      const std::uint64_t mass =
          std::accumulate(np.pairs.begin(), np.pairs.end(), std::uint64_t{0}) + np.beyond + np.disconnected;
      if (mass != np.total_pairs) ++bad_mass;
    }
  }
  return {bad_cells == 0 && bad_mass == 0, std::to_string(bad_cells) + " graphs with cell mismatch, " +
                                               std::to_string(bad_mass) + " nodes with mass != 1"};
}

Outcome epidemic_threshold() {
  const CallGraph g = fixtures::star(100);
  const double beta_c = spectral_radius(g).beta_c;
  SisParams base;
  base.delta = 0.2;
  base.initial_infected = {*g.find("h")};
  base.max_steps = 500;
  base.seed = 0xacce5507;
  const std::vector<double> ratios = {0.05, 0.075, 0.1, 0.15, 0.2, 0.3, 0.5, 1.0, 2.0, 5.0};
  const ThresholdSweep s = threshold_sweep(g, ratios, 200, base);
  int inversions = 0;
  for (std::size_t i = 1; i < s.extinction_prob.size(); ++i)
    if (s.extinction_prob[i] > s.extinction_prob[i - 1]) ++inversions;
  const double low = s.extinction_prob.front(), high = s.extinction_prob.back();
  return {close(beta_c, 0.1, 1e-9) && low >= 0.95 && high <= 0.5 && inversions <= 2,
          "beta_c " + fmt(beta_c) + ", extinction " + fmt(low) + " at 0.05, " + fmt(high) + " at 5.0, " +
              std::to_string(inversions) + " inversions"};
}

Outcome baseline_ratio() {
  AnalysisConfig c;
  c.inputs = {fixture("bridged_triangles.txt")};
  c.metrics = {Metric::kClustering};
  const MetricsReport r = analyze(c);
  RandomGraphSpec spec;
  spec.n = r.graph.n;
  spec.m = r.graph.m;
  spec.seed = 0xacce5508;
  const BaselineReport b = compare_baseline(r, spec, 30);
  const double ratio = b.clustering.ratio.value_or(0.0);
  return {ratio > 5.0, "observed/baseline clustering " + fmt(ratio) + " over " +
                           std::to_string(b.clustering.defined_replicates) + " defined replicates"};
}

int run_cli(const std::string& args, const std::filesystem::path& out) {
  const std::string cmd = std::string("\"") + CGM_CLI_PATH + "\" " + args + " >\"" + out.string() + "\" 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome determinism() {
  const auto dir = cgm::testing::scratch_dir("acceptance-det");
  const std::string graph = "\"" + fixture("hierarchical.txt").string() + "\"";
  const std::string manifest = "\"" + fixture("corpus.tsv").string() + "\"";
  bool ok = run_cli("analyze " + graph + " --seed 17", dir / "a1.json") == 0 &&
            run_cli("analyze " + graph + " --seed 17", dir / "a2.json") == 0 &&
            run_cli("baseline " + graph + " --seed 17 --replicates 5", dir / "b1.json") == 0 &&
            run_cli("baseline " + graph + " --seed 17 --replicates 5", dir / "b2.json") == 0 &&
            run_cli("corpus " + manifest + " --seed 17 --jobs 1", dir / "c1.json") == 0 &&
            run_cli("corpus " + manifest + " --seed 17 --jobs 3", dir / "c3.json") == 0;
  if (!ok) return {false, "a CLI run exited nonzero"};
  using cgm::testing::slurp;
  const bool analyze_same = slurp(dir / "a1.json") == slurp(dir / "a2.json");
  const bool baseline_same = slurp(dir / "b1.json") == slurp(dir / "b2.json");
  const bool corpus_same = slurp(dir / "c1.json") == slurp(dir / "c3.json");
  std::filesystem::remove_all(dir);
  return {analyze_same && baseline_same && corpus_same,
          std::string("analyze ") + (analyze_same ? "identical" : "DIFFERS") + ", baseline " +
              (baseline_same ? "identical" : "DIFFERS") + ", corpus jobs 1 vs 3 " +
              (corpus_same ? "identical" : "DIFFERS")};
}

Outcome end_to_end() {
  const auto entries = parse_manifest(read_file(fixture("corpus.tsv")), fixture(""));
  AnalysisConfig c;
  c.seed = 2026;
  const CorpusResult r = analyze_corpus(entries, c, 1);
  const auto& cols = r.summary.columns;
  const auto col = [&](const std::string& name) {
    return static_cast<std::size_t>(std::find(cols.begin(), cols.end(), name) - cols.begin());
  };
  std::optional<double> gamma;
  bool complete = r.summary.rows.size() == entries.size();
  for (const SummaryRow& row : r.summary.rows) {
    complete &= row.status == "ok" && row.values.size() == cols.size();
    complete &= row.values[col("n")].has_value() && row.values[col("mean_degree")].has_value();
    if (row.label == "config") gamma = row.values[col("in_gamma")];
  }
  const bool in_band = gamma && *gamma >= 2.3 && *gamma <= 2.9;
  return {entries.size() >= 5 && r.failure_count() == 0 && complete && in_band,
          std::to_string(entries.size()) + " entries, " + std::to_string(r.failure_count()) +
              " failures, config in-degree gamma " + (gamma ? fmt(*gamma) : std::string("missing"))};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "betweenness matches geodesic enumeration", 10, betweenness_oracle},
      {2, "strong components match reachability", 5, scc_oracle},
      {3, "spectral radius matches dense eigensolver", 0, spectral_oracle},
      {4, "power-law MLE and fit comparison", 60, power_law_mle},
      {5, "closed-form metric identities", 0, closed_forms},
      {6, "clustering profile identity and mass", 0, profile_identity},
      {7, "SIS extinction around the threshold", 30, epidemic_threshold},
      {8, "clustering far above random baseline", 0, baseline_ratio},
      {9, "byte-identical reruns", 0, determinism},
      {10, "end-to-end corpus", 120, end_to_end},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0 && secs >= c.time_limit_s) {
      o.pass = false;
      o.detail += "; over the " + fmt(c.time_limit_s) + " s limit";
    }
    if (!o.pass) ++failures;
    std::printf("[%s] %2d %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
