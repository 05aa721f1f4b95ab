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

#include <string>

#include "cgm/errors.hpp"
#include "cgm/report.hpp"
#include "json.hpp"

namespace cgm {
namespace {

using nlohmann::json;

// Undefined scalars are written as {"value": null, "reason": ...} so a reader
// can tell them apart from a missing key.
json enc(const std::optional<double>& v, const char* reason) {
  if (v) return *v;
  return json{{"value", nullptr}, {"reason", reason}};
}

std::optional<double> dec_opt(const json& j) {
  if (j.is_number()) return j.get<double>();
  return std::nullopt;
}

const json& at(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw ValidationError(std::string("report JSON is missing '") + key + "'");
  return *it;
}

template <typename T>
T get(const json& j, const char* key) {
  try {
    return at(j, key).get<T>();
  } catch (const json::exception& e) {
    throw ValidationError(std::string("report JSON field '") + key + "': " + e.what());
  }
}

template <typename T, typename Enc>
json enc_slot(const Slot<T>& slot, Enc&& encode) {
  if (!slot.has_value()) return json{{"skipped", true}, {"reason", slot.reason}};
  return encode(*slot.value);
}

template <typename T, typename Dec>
Slot<T> dec_slot(const json& j, Dec&& decode) {
  if (j.contains("skipped")) return Slot<T>::skipped(get<std::string>(j, "reason"));
  return Slot<T>{decode(j), {}};
}

DegreeMode degree_mode_from(const std::string& s) {
  if (s == "in") return DegreeMode::kIn;
  if (s == "out") return DegreeMode::kOut;
  if (s == "total") return DegreeMode::kTotal;
  throw ValidationError("unknown degree mode '" + s + "'");
}

FitVerdict verdict_from(const std::string& s) {
  for (FitVerdict v : {FitVerdict::kPowerLaw, FitVerdict::kExponential, FitVerdict::kInconclusive}) {
    if (s == to_string(v)) return v;
  }
  throw ValidationError("unknown fit verdict '" + s + "'");
}

AssortativityMode assort_mode_from(const std::string& s) {
  for (AssortativityMode m :
       {AssortativityMode::kInIn, AssortativityMode::kOutOut, AssortativityMode::kTotal}) {
    if (s == to_string(m)) return m;
  }
  throw ValidationError("unknown assortativity mode '" + s + "'");
}

const char* model_name(RandomModel m) {
  return m == RandomModel::kErdosRenyiGnm ? "gnm" : "configuration";
}

RandomModel model_from(const std::string& s) {
  if (s == "gnm") return RandomModel::kErdosRenyiGnm;
  if (s == "configuration") return RandomModel::kErasedConfiguration;
  throw ValidationError("unknown random model '" + s + "'");
}

// Degree keyed maps become arrays of [key, value] pairs so integer keys
// survive the round trip.
json enc_map(const std::map<std::uint64_t, double>& m) {
  json a = json::array();
  for (const auto& [k, v] : m) a.push_back(json::array({k, v}));
  return a;
}

std::map<std::uint64_t, double> dec_map(const json& a) {
  std::map<std::uint64_t, double> m;
  for (const json& p : a) m.emplace(p.at(0).get<std::uint64_t>(), p.at(1).get<double>());
  return m;
}

json enc(const PowerLawFit& f) {
  return {{"gamma", f.gamma}, {"x_min", f.x_min}, {"n_tail", f.n_tail},
          {"log_likelihood", f.log_likelihood}, {"ks_stat", f.ks_stat},
          {"zero_count", f.zero_count}};
}

PowerLawFit dec_power_law(const json& j) {
  return {get<double>(j, "gamma"), get<std::uint64_t>(j, "x_min"), get<std::size_t>(j, "n_tail"),
          get<double>(j, "log_likelihood"), get<double>(j, "ks_stat"),
          get<std::size_t>(j, "zero_count")};
}

json enc(const ExponentialFit& f) {
  return {{"rate", f.rate}, {"x_min", f.x_min}, {"n_tail", f.n_tail},
          {"log_likelihood", f.log_likelihood}};
}

ExponentialFit dec_exponential(const json& j) {
  return {get<double>(j, "rate"), get<std::uint64_t>(j, "x_min"), get<std::size_t>(j, "n_tail"),
          get<double>(j, "log_likelihood")};
}

json enc(const FitComparison& c) {
  return {{"lr", c.lr}, {"normalized_lr", c.normalized_lr}, {"verdict", to_string(c.verdict)}};
}

FitComparison dec_comparison(const json& j) {
  return {get<double>(j, "lr"), get<double>(j, "normalized_lr"),
          verdict_from(get<std::string>(j, "verdict"))};
}

json enc(const DegreeModeReport& r) {
  json ccdf = json::array();
  for (const CcdfPoint& p : r.ccdf) ccdf.push_back(json::array({p.degree, p.ccdf}));
  return {{"mode", to_string(r.summary.mode)},
          {"mean", r.summary.mean},
          {"variance", r.summary.variance},
          {"ccdf", ccdf},
          {"power_law", enc_slot(r.power_law, [](const auto& v) { return enc(v); })},
          {"exponential", enc_slot(r.exponential, [](const auto& v) { return enc(v); })},
          {"comparison", enc_slot(r.comparison, [](const auto& v) { return enc(v); })}};
}

DegreeModeReport dec_degree_mode(const json& j) {
  DegreeModeReport r;
  r.summary.mode = degree_mode_from(get<std::string>(j, "mode"));
  r.summary.mean = get<double>(j, "mean");
  r.summary.variance = get<double>(j, "variance");
  for (const json& p : at(j, "ccdf")) {
    r.ccdf.push_back({p.at(0).get<std::uint64_t>(), p.at(1).get<double>()});
  }
  r.power_law = dec_slot<PowerLawFit>(at(j, "power_law"), dec_power_law);
  r.exponential = dec_slot<ExponentialFit>(at(j, "exponential"), dec_exponential);
  r.comparison = dec_slot<FitComparison>(at(j, "comparison"), dec_comparison);
  return r;
}

json enc(const AssortativityResult& a) {
  return {{"mode", to_string(a.mode)}, {"rho", enc(a.rho, "zero degree variance")}};
}

AssortativityResult dec_assort(const json& j) {
  return {assort_mode_from(get<std::string>(j, "mode")), dec_opt(at(j, "rho"))};
}

json enc(const ClusteringReport& c) {
  return {{"global_c", enc(c.global_c, "no node with degree >= 2")},
          {"defined_nodes", c.defined_nodes},
          {"by_degree", enc_map(c.by_degree)},
          {"degree_slope", enc_slot(c.degree_slope, [](const ClusteringSlope& s) {
             return json{{"slope", s.slope}, {"intercept", s.intercept},
                         {"residual", s.residual}, {"points", s.points}};
           })}};
}

ClusteringReport dec_clustering(const json& j) {
  ClusteringReport c;
  c.global_c = dec_opt(at(j, "global_c"));
  c.defined_nodes = get<std::size_t>(j, "defined_nodes");
  c.by_degree = dec_map(at(j, "by_degree"));
  c.degree_slope = dec_slot<ClusteringSlope>(at(j, "degree_slope"), [](const json& s) {
    return ClusteringSlope{get<double>(s, "slope"), get<double>(s, "intercept"),
                           get<double>(s, "residual"), get<std::size_t>(s, "points")};
  });
  return c;
}

json enc(const ClusteringProfile& p) {
  json cells = json::array();
  for (const auto& m : p.cell) cells.push_back(enc_map(m));
  return {{"d_max", p.d_max},
          {"cell", cells},
          {"aggregate", p.aggregate},
          {"beyond_aggregate", p.beyond_aggregate},
          {"disconnected_aggregate", p.disconnected_aggregate},
          {"eligible_nodes", p.eligible_nodes}};
}

ClusteringProfile dec_profile(const json& j) {
  ClusteringProfile p;
  p.d_max = get<std::size_t>(j, "d_max");
  for (const json& m : at(j, "cell")) p.cell.push_back(dec_map(m));
  p.aggregate = get<std::vector<double>>(j, "aggregate");
  p.beyond_aggregate = get<double>(j, "beyond_aggregate");
  p.disconnected_aggregate = get<double>(j, "disconnected_aggregate");
  p.eligible_nodes = get<std::size_t>(j, "eligible_nodes");
  return p;
}

json enc(const GeodesicSummary& g) {
  return {{"harmonic_mean_ell", enc(g.harmonic_mean_ell, "no reachable pair")},
          {"inverse_distance_sum", g.inverse_distance_sum},
          {"reachable_pair_fraction", g.reachable_pair_fraction},
          {"directed", g.directed},
          {"ell_n_plus_one", enc(g.ell_n_plus_one, "no reachable pair")}};
}

GeodesicSummary dec_geodesic(const json& j) {
  GeodesicSummary g;
  g.harmonic_mean_ell = dec_opt(at(j, "harmonic_mean_ell"));
  g.inverse_distance_sum = get<double>(j, "inverse_distance_sum");
  g.reachable_pair_fraction = get<double>(j, "reachable_pair_fraction");
  g.directed = get<bool>(j, "directed");
  g.ell_n_plus_one = dec_opt(at(j, "ell_n_plus_one"));
  return g;
}

json enc(const BetweennessReport& b) {
  json buckets = json::array();
  for (const auto& h : b.distribution.buckets) buckets.push_back(json::array({h.lower, h.count}));
  json ccdf = json::array();
  for (const auto& p : b.distribution.ccdf) ccdf.push_back(json::array({p.value, p.ccdf}));
  json ranked = json::array();
  for (const auto& s : b.ranked) ranked.push_back(json::array({s.node, s.value}));
  return {{"max", b.max},
          {"mean", b.mean},
          {"zero_count", b.distribution.zero_count},
          {"histogram", buckets},
          {"ccdf", ccdf},
          {"ranked", ranked}};
}

BetweennessReport dec_betweenness(const json& j) {
  BetweennessReport b;
  b.max = get<double>(j, "max");
  b.mean = get<double>(j, "mean");
  b.distribution.zero_count = get<std::size_t>(j, "zero_count");
  for (const json& h : at(j, "histogram")) {
    b.distribution.buckets.push_back({h.at(0).get<double>(), h.at(1).get<std::size_t>()});
  }
  for (const json& p : at(j, "ccdf")) {
    b.distribution.ccdf.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
  }
  for (const json& s : at(j, "ranked")) {
    b.ranked.push_back({s.at(0).get<std::string>(), s.at(1).get<double>()});
  }
  return b;
}

json enc(const ComponentStats& c) {
  return {{"wcc_count", c.wcc_count},
          {"scc_count", c.scc_count},
          {"scc_nontrivial_count", c.scc_nontrivial_count},
          {"largest_scc_fraction", c.largest_scc_fraction},
          {"largest_scc_size", c.largest_scc_size},
          {"largest_wcc_size", c.largest_wcc_size}};
}

ComponentStats dec_components(const json& j) {
  return {get<std::size_t>(j, "wcc_count"),        get<std::size_t>(j, "scc_count"),
          get<std::size_t>(j, "scc_nontrivial_count"), get<double>(j, "largest_scc_fraction"),
          get<std::size_t>(j, "largest_scc_size"), get<std::size_t>(j, "largest_wcc_size")};
}

json enc(const ReciprocityResult& r) {
  return {{"varrho", r.varrho},
          {"a_bar", r.a_bar},
          {"rho", enc(r.rho, "complete graph (a_bar = 1)")},
          {"reciprocal_arcs", r.reciprocal_arcs}};
}

ReciprocityResult dec_reciprocity(const json& j) {
  return {get<double>(j, "varrho"), get<double>(j, "a_bar"), dec_opt(at(j, "rho")),
          get<std::uint64_t>(j, "reciprocal_arcs")};
}

json enc(const SpectralResult& s) {
  return {{"lambda1", s.lambda1}, {"beta_c", s.beta_c}, {"iterations", s.iterations},
          {"residual", s.residual}};
}

SpectralResult dec_spectral(const json& j) {
  SpectralResult s;
  s.lambda1 = get<double>(j, "lambda1");
  s.beta_c = get<double>(j, "beta_c");
  s.iterations = get<std::size_t>(j, "iterations");
  s.residual = get<double>(j, "residual");
  return s;
}

json enc(const BaselineMetric& b) {
  return {{"observed", enc(b.observed, "not computed")},
          {"mean", enc(b.mean, "no defined replicate")},
          {"stddev", enc(b.stddev, "fewer than 2 defined replicates")},
          {"ratio", enc(b.ratio, "observed or mean unavailable")},
          {"defined_replicates", b.defined_replicates}};
}

BaselineMetric dec_baseline_metric(const json& j) {
  return {dec_opt(at(j, "observed")), dec_opt(at(j, "mean")), dec_opt(at(j, "stddev")),
          dec_opt(at(j, "ratio")), get<std::size_t>(j, "defined_replicates")};
}

json enc(const BaselineReport& b) {
  return {{"model", model_name(b.model)},
          {"n", b.n},
          {"m", b.m},
          {"gamma", b.gamma},
          {"seed", b.seed},
          {"replicates", b.replicates},
          {"clustering", enc(b.clustering)},
          {"geodesic", enc(b.geodesic)},
          {"reciprocity", enc(b.reciprocity)}};
}

BaselineReport dec_baseline(const json& j) {
  BaselineReport b;
  b.model = model_from(get<std::string>(j, "model"));
  b.n = get<std::size_t>(j, "n");
  b.m = get<std::size_t>(j, "m");
  b.gamma = get<double>(j, "gamma");
  b.seed = get<std::uint64_t>(j, "seed");
  b.replicates = get<std::size_t>(j, "replicates");
  b.clustering = dec_baseline_metric(at(j, "clustering"));
  b.geodesic = dec_baseline_metric(at(j, "geodesic"));
  b.reciprocity = dec_baseline_metric(at(j, "reciprocity"));
  return b;
}

json enc_report(const MetricsReport& r) {
  const GraphInfo& g = r.graph;
  json out;
  out["graph"] = {{"label", g.label},
                  {"path", g.path},
                  {"n", g.n},
                  {"m", g.m},
                  {"full_n", g.full_n},
                  {"full_m", g.full_m},
                  {"self_loops_dropped", g.self_loops_dropped},
                  {"duplicates_dropped", g.duplicates_dropped}};
  out["degree"] = enc_slot(r.degree, [](const DegreeReport& d) {
    return json{{"in", enc(d.in)}, {"out", enc(d.out)}};
  });
  out["assortativity"] = enc_slot(r.assortativity, [](const AssortativityReport& a) {
    return json{{"in_in", enc(a.in_in)}, {"out_out", enc(a.out_out)}, {"total", enc(a.total)}};
  });
  out["scale_free"] = enc_slot(r.scale_free, [](const ScaleFreeResult& s) {
    return json{{"s", s.s}, {"s_max", s.s_max}, {"S", s.S}};
  });
  out["clustering"] = enc_slot(r.clustering, [](const auto& v) { return enc(v); });
  out["clustering_profile"] = enc_slot(r.clustering_profile, [](const auto& v) { return enc(v); });
  out["geodesic"] = enc_slot(r.geodesic, [](const auto& v) { return enc(v); });
  out["betweenness"] = enc_slot(r.betweenness, [](const auto& v) { return enc(v); });
  out["components"] = enc_slot(r.components, [](const auto& v) { return enc(v); });
  out["reciprocity"] = enc_slot(r.reciprocity, [](const auto& v) { return enc(v); });
  out["spectral"] = enc_slot(r.spectral, [](const auto& v) { return enc(v); });
  out["baseline"] = enc_slot(r.baseline, [](const auto& v) { return enc(v); });
  const ConfigEcho& c = r.config;
  out["config"] = {{"metrics", c.metrics},
                   {"format", c.format},
                   {"directed_geodesics", c.directed_geodesics},
                   {"seed", c.seed},
                   {"tolerance", c.tolerance},
                   {"max_iterations", c.max_iterations},
                   {"d_max", c.d_max},
                   {"strict", c.strict},
                   {"baseline_replicates", c.baseline_replicates}};
  out["version"] = r.version;
  return out;
}

MetricsReport dec_report(const json& j) {
  MetricsReport r;
  const json& g = at(j, "graph");
  r.graph = {get<std::string>(g, "label"),
             get<std::string>(g, "path"),
             get<std::size_t>(g, "n"),
             get<std::size_t>(g, "m"),
             get<std::size_t>(g, "full_n"),
             get<std::size_t>(g, "full_m"),
             get<std::size_t>(g, "self_loops_dropped"),
             get<std::size_t>(g, "duplicates_dropped")};
  r.degree = dec_slot<DegreeReport>(at(j, "degree"), [](const json& d) {
    return DegreeReport{dec_degree_mode(at(d, "in")), dec_degree_mode(at(d, "out"))};
  });
  r.assortativity = dec_slot<AssortativityReport>(at(j, "assortativity"), [](const json& a) {
    return AssortativityReport{dec_assort(at(a, "in_in")), dec_assort(at(a, "out_out")),
                               dec_assort(at(a, "total"))};
  });
  r.scale_free = dec_slot<ScaleFreeResult>(at(j, "scale_free"), [](const json& s) {
    return ScaleFreeResult{get<double>(s, "s"), get<double>(s, "s_max"), get<double>(s, "S")};
  });
  r.clustering = dec_slot<ClusteringReport>(at(j, "clustering"), dec_clustering);
  r.clustering_profile = dec_slot<ClusteringProfile>(at(j, "clustering_profile"), dec_profile);
  r.geodesic = dec_slot<GeodesicSummary>(at(j, "geodesic"), dec_geodesic);
  r.betweenness = dec_slot<BetweennessReport>(at(j, "betweenness"), dec_betweenness);
  r.components = dec_slot<ComponentStats>(at(j, "components"), dec_components);
  r.reciprocity = dec_slot<ReciprocityResult>(at(j, "reciprocity"), dec_reciprocity);
  r.spectral = dec_slot<SpectralResult>(at(j, "spectral"), dec_spectral);
  r.baseline = dec_slot<BaselineReport>(at(j, "baseline"), dec_baseline);
  const json& c = at(j, "config");
  r.config.metrics = get<std::vector<std::string>>(c, "metrics");
  r.config.format = get<std::string>(c, "format");
  r.config.directed_geodesics = get<bool>(c, "directed_geodesics");
  r.config.seed = get<std::uint64_t>(c, "seed");
  r.config.tolerance = get<double>(c, "tolerance");
  r.config.max_iterations = get<std::size_t>(c, "max_iterations");
  r.config.d_max = get<std::size_t>(c, "d_max");
  r.config.strict = get<bool>(c, "strict");
  r.config.baseline_replicates = get<std::size_t>(c, "baseline_replicates");
  r.version = get<std::string>(j, "version");
  return r;
}

}  // namespace

std::string to_json(const MetricsReport& report) { return enc_report(report).dump(2) + "\n"; }

MetricsReport report_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed report JSON: ") + e.what());
  }
  return dec_report(j);
}

std::string to_json(const CorpusResult& corpus) {
  json out;
  json reports = json::array();
  json failures = json::array();
  for (const CorpusEntryResult& e : corpus.entries) {
    if (e.report) {
      json r = enc_report(*e.report);
      r["graph"]["language"] = e.entry.language;
      r["graph"]["domain"] = e.entry.domain;
      reports.push_back(std::move(r));
    } else {
      const CorpusFailure& f = *e.failure;
      failures.push_back({{"label", f.label},
                          {"language", f.language},
                          {"domain", f.domain},
                          {"path", f.path},
                          {"error", f.error}});
    }
  }
  json rows = json::array();
  for (const SummaryRow& row : corpus.summary.rows) {
    json values = json::object();
    for (std::size_t i = 0; i < corpus.summary.columns.size(); ++i) {
      values[corpus.summary.columns[i]] = enc(row.values[i], "unavailable");
    }
    json jr = {{"label", row.label},
               {"language", row.language},
               {"domain", row.domain},
               {"status", row.status},
               {"values", values}};
    if (!row.error.empty()) jr["error"] = row.error;
    rows.push_back(std::move(jr));
  }
  out["reports"] = std::move(reports);
  out["failures"] = std::move(failures);
  out["summary"] = {{"columns", corpus.summary.columns}, {"rows", rows}};
  out["version"] = std::string(version());
  return out.dump(2) + "\n";
}

}  // namespace cgm
