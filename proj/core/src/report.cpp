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

#include "cgm/report.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <thread>

#include "cgm/errors.hpp"
#include "cgm/parallel.hpp"
#include "cgm/random.hpp"
#include "cgm/transform.hpp"

#ifndef CGM_VERSION
#define CGM_VERSION "0.0.0"
#endif

namespace cgm {
namespace {

// Runs fn and stores its value, or the error message when it throws.
template <typename T, typename Fn>
Slot<T> attempt(bool selected, Fn&& fn) {
  if (!selected) return Slot<T>::skipped("not selected");
  try {
    return Slot<T>{fn(), {}};
  } catch (const std::exception& e) {
    return Slot<T>::skipped(e.what());
  }
}

DegreeModeReport degree_mode_report(const CallGraph& g, DegreeMode mode) {
  const DegreeSequence seq = degree_sequence(g, mode);
  DegreeModeReport r;
  r.summary = degree_summary(seq);
  r.ccdf = empirical_ccdf(seq);
  r.power_law = attempt<PowerLawFit>(true, [&] { return fit_power_law(seq); });
  if (!r.power_law.has_value()) {
    r.exponential = Slot<ExponentialFit>::skipped("no power-law tail to compare on");
    r.comparison = Slot<FitComparison>::skipped("no power-law tail to compare on");
    return r;
  }
  const PowerLawFit& pl = *r.power_law.value;
  r.exponential = attempt<ExponentialFit>(true, [&] { return fit_exponential(seq, pl.x_min); });
  if (r.exponential.has_value()) {
    r.comparison =
        attempt<FitComparison>(true, [&] { return compare_fits(pl, *r.exponential.value, seq); });
  } else {
    r.comparison = Slot<FitComparison>::skipped(r.exponential.reason);
  }
  return r;
}

BetweennessReport betweenness_report(const CallGraph& g) {
  BetweennessResult res = betweenness(g);
  BetweennessReport r;
  r.distribution = std::move(res.distribution);
  std::vector<NodeId> order(g.n());
  for (NodeId v = 0; v < g.n(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    return res.per_node[a] > res.per_node[b];
  });
  CompensatedSum total;
  for (double v : res.per_node) total.add(v);
  r.mean = g.n() > 0 ? total.value() / static_cast<double>(g.n()) : 0.0;
  r.max = order.empty() ? 0.0 : res.per_node[order.front()];
  r.ranked.reserve(order.size());
  for (NodeId v : order) r.ranked.push_back({g.name(v), res.per_node[v]});
  return r;
}

ClusteringReport clustering_report(const CallGraph& g) {
  ClusteringResult res = clustering(g);
  ClusteringReport r;
  r.global_c = res.global_c;
  r.defined_nodes = static_cast<std::size_t>(std::count_if(
      res.per_node.begin(), res.per_node.end(), [](const auto& c) { return c.has_value(); }));
  r.by_degree = std::move(res.by_degree);
  r.degree_slope =
      attempt<ClusteringSlope>(true, [&] { return clustering_by_degree_fit(r.by_degree); });
  return r;
}

ConfigEcho echo(const AnalysisConfig& config, InputFormat format) {
  ConfigEcho e;
  for (Metric m : kAllMetrics) {
    if (config.metrics.contains(m)) e.metrics.emplace_back(to_string(m));
  }
  e.format = format == InputFormat::kDot ? "dot" : "edgelist";
  e.directed_geodesics = config.directed_geodesics;
  e.seed = config.seed;
  e.tolerance = config.tolerance;
  e.max_iterations = config.max_iterations;
  e.d_max = config.d_max;
  e.strict = config.strict;
  e.baseline_replicates = config.baseline ? config.baseline_replicates : 0;
  return e;
}

BaselineMetric summarize(std::optional<double> observed, const std::vector<double>& samples) {
  BaselineMetric b;
  b.observed = observed;
  b.defined_replicates = samples.size();
  if (samples.empty()) return b;
  CompensatedSum sum;
  for (double x : samples) sum.add(x);
  const double mean = sum.value() / static_cast<double>(samples.size());
  b.mean = mean;
  if (samples.size() > 1) {
    CompensatedSum ss;
    for (double x : samples) ss.add((x - mean) * (x - mean));
    b.stddev = std::sqrt(ss.value() / static_cast<double>(samples.size() - 1));
  }
  if (observed && mean != 0.0) b.ratio = *observed / mean;
  return b;
}

std::optional<double> opt(double v) { return v; }

std::string format_double(double v) {
  std::ostringstream os;
  os << std::setprecision(std::numeric_limits<double>::max_digits10) << v;
  return os.str();
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string_view version() { return CGM_VERSION; }

const char* to_string(Metric metric) {
  switch (metric) {
    case Metric::kDegree: return "degree";
    case Metric::kAssortativity: return "assortativity";
    case Metric::kScaleFree: return "scale_free";
    case Metric::kClustering: return "clustering";
    case Metric::kClusteringProfile: return "clustering_profile";
    case Metric::kGeodesic: return "geodesic";
    case Metric::kBetweenness: return "betweenness";
    case Metric::kComponents: return "components";
    case Metric::kReciprocity: return "reciprocity";
    case Metric::kSpectral: return "spectral";
  }
  return "?";
}

std::optional<Metric> metric_from_string(std::string_view name) {
  for (Metric m : kAllMetrics) {
    if (name == to_string(m)) return m;
  }
  return std::nullopt;
}

std::set<Metric> parse_metric_list(std::string_view text) {
  if (text == "all") return {kAllMetrics.begin(), kAllMetrics.end()};
  std::set<Metric> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string_view item = text.substr(start, comma - start);
    if (!item.empty()) {
      auto m = metric_from_string(item);
      if (!m) throw ConfigError("unknown metric '" + std::string(item) + "'");
      out.insert(*m);
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (out.empty()) throw ConfigError("metric selection is empty");
  return out;
}

std::vector<std::string> MetricsReport::failed_metrics() const {
  std::vector<std::string> failed;
  auto check = [&](const auto& slot, Metric m) {
    if (!slot.has_value() && slot.reason != "not selected") failed.emplace_back(to_string(m));
  };
  check(degree, Metric::kDegree);
  check(assortativity, Metric::kAssortativity);
  check(scale_free, Metric::kScaleFree);
  check(clustering, Metric::kClustering);
  check(clustering_profile, Metric::kClusteringProfile);
  check(geodesic, Metric::kGeodesic);
  check(betweenness, Metric::kBetweenness);
  check(components, Metric::kComponents);
  check(reciprocity, Metric::kReciprocity);
  check(spectral, Metric::kSpectral);
  return failed;
}

MetricsReport analyze_graph(const CallGraph& full, const AnalysisConfig& config,
                            std::string_view label, std::string_view path) {
  if (config.metrics.empty()) throw ConfigError("metric selection is empty");
  MetricsReport r;
  r.version = std::string(version());
  r.config = echo(config, config.format.value_or(InputFormat::kEdgeList));

  const CallGraph g = largest_wcc(full);
  r.graph.label = std::string(label);
  r.graph.path = std::string(path);
  r.graph.n = g.n();
  r.graph.m = g.m();
  r.graph.full_n = full.n();
  r.graph.full_m = full.m();
  r.graph.self_loops_dropped = full.ingest_stats().self_loops_dropped;
  r.graph.duplicates_dropped = full.ingest_stats().duplicates_dropped;

  auto selected = [&](Metric m) { return config.metrics.contains(m); };

  r.degree = attempt<DegreeReport>(selected(Metric::kDegree), [&] {
    return DegreeReport{degree_mode_report(g, DegreeMode::kIn),
                        degree_mode_report(g, DegreeMode::kOut)};
  });
  r.assortativity = attempt<AssortativityReport>(selected(Metric::kAssortativity), [&] {
    return AssortativityReport{assortativity(g, AssortativityMode::kInIn),
                               assortativity(g, AssortativityMode::kOutOut),
                               assortativity(g, AssortativityMode::kTotal)};
  });
  r.scale_free = attempt<ScaleFreeResult>(selected(Metric::kScaleFree),
                                          [&] { return scale_free_metric(g); });
  r.clustering = attempt<ClusteringReport>(selected(Metric::kClustering),
                                           [&] { return clustering_report(g); });
  r.clustering_profile =
      attempt<ClusteringProfile>(selected(Metric::kClusteringProfile), [&] {
        ClusteringProfile p = clustering_profile(g, config.d_max);
        p.per_node.clear();
        return p;
      });
  r.geodesic = attempt<GeodesicSummary>(selected(Metric::kGeodesic), [&] {
    return harmonic_geodesic_mean(g, config.directed_geodesics);
  });
  r.betweenness = attempt<BetweennessReport>(selected(Metric::kBetweenness),
                                             [&] { return betweenness_report(g); });
  r.components = attempt<ComponentStats>(selected(Metric::kComponents),
                                         [&] { return component_stats(full); });
  r.reciprocity = attempt<ReciprocityResult>(selected(Metric::kReciprocity),
                                             [&] { return reciprocity(g); });
  r.spectral = attempt<SpectralResult>(selected(Metric::kSpectral), [&] {
    SpectralResult s = spectral_radius(g, {config.tolerance, config.max_iterations});
    s.eigenvector.clear();
    return s;
  });

  if (config.baseline) {
    RandomGraphSpec spec = *config.baseline;
    if (spec.n == 0) spec.n = g.n();
    if (spec.m == 0) spec.m = g.m();
    r.baseline = attempt<BaselineReport>(
        true, [&] { return compare_baseline(r, spec, config.baseline_replicates); });
  } else {
    r.baseline = Slot<BaselineReport>::skipped("not requested");
  }
  return r;
}

MetricsReport analyze(const AnalysisConfig& config) {
  if (config.inputs.empty()) throw ConfigError("no input given");
  const auto& path = config.inputs.front();
  const InputFormat format = config.format.value_or(format_for_path(path));
  const CallGraph g = load_graph_file(path, format);
  AnalysisConfig effective = config;
  effective.format = format;
  const std::string label = config.label.empty() ? path.stem().string() : config.label;
  return analyze_graph(g, effective, label, path.string());
}

BaselineReport compare_baseline(const MetricsReport& report, const RandomGraphSpec& spec,
                                std::size_t replicates) {
  if (replicates < 2) throw ConfigError("baseline needs at least 2 replicates");
  if (spec.n != report.graph.n ||
      (spec.model == RandomModel::kErdosRenyiGnm && spec.m != report.graph.m)) {
    throw ConfigError("baseline spec (n=" + std::to_string(spec.n) + ", m=" +
                      std::to_string(spec.m) + ") does not match the analysed graph (n=" +
                      std::to_string(report.graph.n) + ", m=" + std::to_string(report.graph.m) +
                      ")");
  }
  validate(spec);
  const bool directed = report.config.directed_geodesics;
  std::vector<double> cs, ells, varrhos;
  for (std::size_t i = 0; i < replicates; ++i) {
    RandomGraphSpec rs = spec;
    rs.seed = derive_seed(spec.seed, i, 0xba5e);
    const CallGraph g = generate_random(rs);
    if (auto c = clustering(g).global_c) cs.push_back(*c);
    if (g.n() >= 2) {
      if (auto ell = harmonic_geodesic_mean(g, directed).harmonic_mean_ell) ells.push_back(*ell);
    }
    if (g.m() > 0) varrhos.push_back(reciprocity(g).varrho);
  }
  BaselineReport b;
  b.model = spec.model;
  b.n = spec.n;
  b.m = spec.m;
  b.gamma = spec.model == RandomModel::kErasedConfiguration ? spec.gamma : 0.0;
  b.seed = spec.seed;
  b.replicates = replicates;
  std::optional<double> obs_c, obs_ell, obs_varrho;
  if (report.clustering.has_value()) obs_c = report.clustering.value->global_c;
  if (report.geodesic.has_value()) obs_ell = report.geodesic.value->harmonic_mean_ell;
  if (report.reciprocity.has_value()) obs_varrho = opt(report.reciprocity.value->varrho);
  b.clustering = summarize(obs_c, cs);
  b.geodesic = summarize(obs_ell, ells);
  b.reciprocity = summarize(obs_varrho, varrhos);
  return b;
}

std::size_t CorpusResult::failure_count() const {
  return static_cast<std::size_t>(std::count_if(
      entries.begin(), entries.end(), [](const auto& e) { return e.failure.has_value(); }));
}

const std::vector<std::string>& summary_columns() {
  static const std::vector<std::string> columns = {
      "n",           "m",           "full_n",          "full_m",
      "mean_degree", "in_gamma",    "in_x_min",        "out_gamma",
      "out_x_min",   "assort_in_in", "assort_out_out", "assort_total",
      "scale_free_S", "clustering_c", "ell",           "reciprocity_rho",
      "reciprocity_varrho", "lambda1", "beta_c",       "wcc_count",
      "scc_count",   "scc_nontrivial", "largest_scc_fraction", "betweenness_max"};
  return columns;
}

SummaryRow summary_row(const MetricsReport& r, const CorpusEntry& entry) {
  SummaryRow row;
  row.label = entry.label;
  row.language = entry.language;
  row.domain = entry.domain;
  row.status = "ok";
  using D = std::optional<double>;
  auto num = [](auto v) -> D { return static_cast<double>(v); };
  D in_gamma, in_xmin, out_gamma, out_xmin, mean_degree;
  if (r.degree.has_value()) {
    const DegreeReport& d = *r.degree.value;
    mean_degree = d.in.summary.mean;
    if (d.in.power_law.has_value()) {
      in_gamma = d.in.power_law.value->gamma;
      in_xmin = num(d.in.power_law.value->x_min);
    }
    if (d.out.power_law.has_value()) {
      out_gamma = d.out.power_law.value->gamma;
      out_xmin = num(d.out.power_law.value->x_min);
    }
  }
  D a_ii, a_oo, a_tt;
  if (r.assortativity.has_value()) {
    a_ii = r.assortativity.value->in_in.rho;
    a_oo = r.assortativity.value->out_out.rho;
    a_tt = r.assortativity.value->total.rho;
  }
  D sf = r.scale_free.has_value() ? D(r.scale_free.value->S) : D();
  D cc = r.clustering.has_value() ? r.clustering.value->global_c : D();
  D ell = r.geodesic.has_value() ? r.geodesic.value->harmonic_mean_ell : D();
  D rr, rv;
  if (r.reciprocity.has_value()) {
    rr = r.reciprocity.value->rho;
    rv = r.reciprocity.value->varrho;
  }
  D l1, bc;
  if (r.spectral.has_value()) {
    l1 = r.spectral.value->lambda1;
    bc = r.spectral.value->beta_c;
  }
  D wcc, scc, nontrivial, frac;
  if (r.components.has_value()) {
    const ComponentStats& c = *r.components.value;
    wcc = num(c.wcc_count);
    scc = num(c.scc_count);
    nontrivial = num(c.scc_nontrivial_count);
    frac = c.largest_scc_fraction;
  }
  D bmax = r.betweenness.has_value() ? D(r.betweenness.value->max) : D();
  row.values = {num(r.graph.n), num(r.graph.m), num(r.graph.full_n), num(r.graph.full_m),
                mean_degree,    in_gamma,       in_xmin,             out_gamma,
                out_xmin,       a_ii,           a_oo,                a_tt,
                sf,             cc,             ell,                 rr,
                rv,             l1,             bc,                  wcc,
                scc,            nontrivial,     frac,                bmax};
  return row;
}

CorpusResult analyze_corpus(const std::vector<CorpusEntry>& entries, const AnalysisConfig& config,
                            std::size_t jobs) {
  CorpusResult out;
  out.entries.resize(entries.size());
  auto run_one = [&](std::size_t i) {
    const CorpusEntry& entry = entries[i];
    CorpusEntryResult& slot = out.entries[i];
    slot.entry = entry;
    try {
      if (!std::filesystem::exists(entry.path)) {
        throw InputError("file not found: " + entry.path.string());
      }
      const InputFormat format = config.format.value_or(format_for_path(entry.path));
      const CallGraph g = load_graph_file(entry.path, format);
      validate_counts(entry, g);
      AnalysisConfig cfg = config;
      cfg.format = format;
      cfg.seed = derive_seed(config.seed, i);
      slot.report = analyze_graph(g, cfg, entry.label, entry.path.string());
    } catch (const std::exception& e) {
      slot.failure = CorpusFailure{entry.label, entry.language, entry.domain,
                                   entry.path.string(), e.what()};
    }
  };

  const std::size_t workers = std::max<std::size_t>(1, std::min(jobs, entries.size()));
  if (workers == 1) {
    for (std::size_t i = 0; i < entries.size(); ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < entries.size(); i = next++) run_one(i);
      });
    }
  }

  out.summary.columns = summary_columns();
  for (const CorpusEntryResult& e : out.entries) {
    if (e.report) {
      out.summary.rows.push_back(summary_row(*e.report, e.entry));
    } else {
      SummaryRow row;
      row.label = e.entry.label;
      row.language = e.entry.language;
      row.domain = e.entry.domain;
      row.status = "failed";
      row.error = e.failure->error;
      row.values.assign(out.summary.columns.size(), std::nullopt);
      out.summary.rows.push_back(std::move(row));
    }
  }
  return out;
}

std::string ccdf_to_csv(const std::vector<CcdfPoint>& ccdf) {
  std::string out = "degree,ccdf\n";
  for (const CcdfPoint& p : ccdf) out += std::to_string(p.degree) + "," + format_double(p.ccdf) + "\n";
  return out;
}

std::string profile_to_csv(const ClusteringProfile& profile) {
  std::string out = "d,k,value\n";
  for (std::size_t d = 0; d < profile.cell.size(); ++d) {
    for (const auto& [k, v] : profile.cell[d]) {
      out += std::to_string(d + 1) + "," + std::to_string(k) + "," + format_double(v) + "\n";
    }
  }
  return out;
}

std::string profile_aggregate_to_csv(const ClusteringProfile& profile) {
  std::string out = "d,aggregate\n";
  for (std::size_t d = 0; d < profile.aggregate.size(); ++d) {
    out += std::to_string(d + 1) + "," + format_double(profile.aggregate[d]) + "\n";
  }
  out += "beyond," + format_double(profile.beyond_aggregate) + "\n";
  out += "disconnected," + format_double(profile.disconnected_aggregate) + "\n";
  return out;
}

std::string betweenness_to_csv(const std::vector<NodeScore>& ranked) {
  std::string out = "node,betweenness\n";
  for (const NodeScore& s : ranked) out += csv_field(s.node) + "," + format_double(s.value) + "\n";
  return out;
}

std::string summary_to_csv(const SummaryTable& table) {
  std::string out = "label,language,domain,status";
  for (const auto& c : table.columns) out += "," + c;
  out += ",error\n";
  for (const SummaryRow& row : table.rows) {
    out += csv_field(row.label) + "," + csv_field(row.language) + "," + csv_field(row.domain) +
           "," + row.status;
    for (const auto& v : row.values) out += "," + (v ? format_double(*v) : std::string());
    out += "," + csv_field(row.error) + "\n";
  }
  return out;
}

std::string sweep_to_csv(const ThresholdSweep& sweep) {
  std::string out = "ratio,extinction_prob,runs\n";
  for (std::size_t i = 0; i < sweep.ratios.size(); ++i) {
    out += format_double(sweep.ratios[i]) + "," + format_double(sweep.extinction_prob[i]) + "," +
           std::to_string(sweep.runs_per_ratio) + "\n";
  }
  return out;
}

std::string trace_to_csv(const SisTrace& trace) {
  std::string out = "step,infected\n";
  for (std::size_t i = 0; i < trace.infected_per_step.size(); ++i) {
    out += std::to_string(i) + "," + std::to_string(trace.infected_per_step[i]) + "\n";
  }
  return out;
}

void write_csv_bundle(const std::string& report_json, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  auto write = [&](const char* name, const std::string& content) {
    std::ofstream f(dir / name, std::ios::binary);
    if (!f) throw InputError("cannot write '" + (dir / name).string() + "'");
    f << content;
  };
  write("report.json", report_json);
  const MetricsReport r = report_from_json(report_json);
  if (r.degree.has_value()) {
    write("degree_ccdf_in.csv", ccdf_to_csv(r.degree.value->in.ccdf));
    write("degree_ccdf_out.csv", ccdf_to_csv(r.degree.value->out.ccdf));
  }
  if (r.clustering_profile.has_value()) {
    write("clustering_profile.csv", profile_to_csv(*r.clustering_profile.value));
    write("clustering_profile_aggregate.csv", profile_aggregate_to_csv(*r.clustering_profile.value));
  }
  if (r.betweenness.has_value()) {
    write("betweenness.csv", betweenness_to_csv(r.betweenness.value->ranked));
  }
}

}  // namespace cgm
