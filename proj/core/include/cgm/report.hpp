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

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cgm/degree_fit.hpp"
#include "cgm/epidemic.hpp"
#include "cgm/generators.hpp"
#include "cgm/graph.hpp"
#include "cgm/io.hpp"
#include "cgm/paths.hpp"
#include "cgm/topology.hpp"

namespace cgm {

std::string_view version();

enum class Metric {
  kDegree,
  kAssortativity,
  kScaleFree,
  kClustering,
  kClusteringProfile,
  kGeodesic,
  kBetweenness,
  kComponents,
  kReciprocity,
  kSpectral,
};

inline constexpr std::array<Metric, 10> kAllMetrics = {
    Metric::kDegree,     Metric::kAssortativity,     Metric::kScaleFree,
    Metric::kClustering, Metric::kClusteringProfile, Metric::kGeodesic,
    Metric::kBetweenness, Metric::kComponents,       Metric::kReciprocity,
    Metric::kSpectral};

const char* to_string(Metric metric);
std::optional<Metric> metric_from_string(std::string_view name);
// "all" or a comma-separated list of metric names. Throws ConfigError.
std::set<Metric> parse_metric_list(std::string_view text);

enum class OutputFormat { kJson, kCsv };

struct AnalysisConfig {
  std::vector<std::filesystem::path> inputs;
  std::optional<InputFormat> format;  // by extension when unset
  std::string label;                  // defaults to the input file stem
  std::set<Metric> metrics{kAllMetrics.begin(), kAllMetrics.end()};
  bool directed_geodesics = false;
  std::uint64_t seed = 0;
  double tolerance = 1e-10;
  std::size_t max_iterations = 200000;
  std::size_t d_max = 4;
  OutputFormat output = OutputFormat::kJson;
  bool strict = false;
  // Random baseline; n and m of 0 are filled from the analysed graph.
  std::optional<RandomGraphSpec> baseline;
  std::size_t baseline_replicates = 30;
};

// A metric value, or the reason it is absent.
template <typename T>
struct Slot {
  std::optional<T> value;
  std::string reason;

  static Slot skipped(std::string why) { return {std::nullopt, std::move(why)}; }
  bool has_value() const noexcept { return value.has_value(); }
  friend bool operator==(const Slot&, const Slot&) = default;
};

struct GraphInfo {
  std::string label;
  std::string path;
  std::size_t n = 0;  // analysed graph (largest weakly connected component)
  std::size_t m = 0;
  std::size_t full_n = 0;  // as loaded
  std::size_t full_m = 0;
  std::size_t self_loops_dropped = 0;
  std::size_t duplicates_dropped = 0;

  friend bool operator==(const GraphInfo&, const GraphInfo&) = default;
};

struct DegreeModeReport {
  DegreeSummary summary;
  std::vector<CcdfPoint> ccdf;
  Slot<PowerLawFit> power_law;
  Slot<ExponentialFit> exponential;  // fitted at the power law's x_min
  Slot<FitComparison> comparison;

  friend bool operator==(const DegreeModeReport&, const DegreeModeReport&) = default;
};

struct DegreeReport {
  DegreeModeReport in;
  DegreeModeReport out;

  friend bool operator==(const DegreeReport&, const DegreeReport&) = default;
};

struct AssortativityReport {
  AssortativityResult in_in;
  AssortativityResult out_out;
  AssortativityResult total;

  friend bool operator==(const AssortativityReport&, const AssortativityReport&) = default;
};

struct ClusteringReport {
  std::optional<double> global_c;
  std::size_t defined_nodes = 0;
  std::map<std::uint64_t, double> by_degree;
  Slot<ClusteringSlope> degree_slope;

  friend bool operator==(const ClusteringReport&, const ClusteringReport&) = default;
};

struct NodeScore {
  std::string node;
  double value = 0.0;

  friend bool operator==(const NodeScore&, const NodeScore&) = default;
};

struct BetweennessReport {
  double max = 0.0;
  double mean = 0.0;
  BetweennessDistribution distribution;
  std::vector<NodeScore> ranked;  // descending, ties by node id

  friend bool operator==(const BetweennessReport&, const BetweennessReport&) = default;
};

struct BaselineMetric {
  std::optional<double> observed;
  std::optional<double> mean;
  std::optional<double> stddev;  // sample deviation over defined replicates
  std::optional<double> ratio;   // observed / mean
  std::size_t defined_replicates = 0;

  friend bool operator==(const BaselineMetric&, const BaselineMetric&) = default;
};

struct BaselineReport {
  RandomModel model = RandomModel::kErdosRenyiGnm;
  std::size_t n = 0;
  std::size_t m = 0;
  double gamma = 0.0;
  std::uint64_t seed = 0;
  std::size_t replicates = 0;
  BaselineMetric clustering;
  BaselineMetric geodesic;
  BaselineMetric reciprocity;

  friend bool operator==(const BaselineReport&, const BaselineReport&) = default;
};

// The configuration as echoed into a report.
struct ConfigEcho {
  std::vector<std::string> metrics;
  std::string format;
  bool directed_geodesics = false;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  std::size_t max_iterations = 0;
  std::size_t d_max = 0;
  bool strict = false;
  std::size_t baseline_replicates = 0;

  friend bool operator==(const ConfigEcho&, const ConfigEcho&) = default;
};

struct MetricsReport {
  GraphInfo graph;
  Slot<DegreeReport> degree;
  Slot<AssortativityReport> assortativity;
  Slot<ScaleFreeResult> scale_free;
  Slot<ClusteringReport> clustering;
  Slot<ClusteringProfile> clustering_profile;  // per_node left empty
  Slot<GeodesicSummary> geodesic;
  Slot<BetweennessReport> betweenness;
  Slot<ComponentStats> components;  // on the full graph
  Slot<ReciprocityResult> reciprocity;
  Slot<SpectralResult> spectral;  // eigenvector left empty
  Slot<BaselineReport> baseline;
  ConfigEcho config;
  std::string version;

  friend bool operator==(const MetricsReport&, const MetricsReport&) = default;

  // Names of metrics that were selected but could not be computed.
  std::vector<std::string> failed_metrics() const;
};

/// Runs the selected metrics. Component statistics use the full graph; every
/// other metric runs on its largest weakly connected component. A metric that
/// throws is recorded as skipped with the error message.
MetricsReport analyze_graph(const CallGraph& full, const AnalysisConfig& config,
                            std::string_view label = {}, std::string_view path = {});

// Loads config.inputs.front() and analyses it. Parse errors propagate.
MetricsReport analyze(const AnalysisConfig& config);

// Throws ConfigError when replicates < 2 or spec (n, m) differs from the
// report's analysed graph.
BaselineReport compare_baseline(const MetricsReport& report, const RandomGraphSpec& spec,
                                std::size_t replicates);

struct CorpusFailure {
  std::string label;
  std::string language;
  std::string domain;
  std::string path;
  std::string error;

  friend bool operator==(const CorpusFailure&, const CorpusFailure&) = default;
};

struct SummaryRow {
  std::string label;
  std::string language;
  std::string domain;
  std::string status;  // "ok" or "failed"
  std::string error;
  std::vector<std::optional<double>> values;  // aligned with columns

  friend bool operator==(const SummaryRow&, const SummaryRow&) = default;
};

struct SummaryTable {
  std::vector<std::string> columns;
  std::vector<SummaryRow> rows;

  friend bool operator==(const SummaryTable&, const SummaryTable&) = default;
};

struct CorpusEntryResult {
  CorpusEntry entry;
  std::optional<MetricsReport> report;
  std::optional<CorpusFailure> failure;
};

struct CorpusResult {
  std::vector<CorpusEntryResult> entries;  // manifest order
  SummaryTable summary;

  std::size_t failure_count() const;
};

// Scalar columns of the corpus summary, in table order.
const std::vector<std::string>& summary_columns();
SummaryRow summary_row(const MetricsReport& report, const CorpusEntry& entry);

/// Analyses every entry with seed derive_seed(config.seed, index). Missing
/// files, parse errors and count mismatches become failure rows. With
/// jobs > 1 entries run concurrently; output order and content do not depend
/// on `jobs`.
CorpusResult analyze_corpus(const std::vector<CorpusEntry>& entries,
                            const AnalysisConfig& config, std::size_t jobs = 1);

// Canonical JSON (sorted keys, 2-space indent, trailing newline).
std::string to_json(const MetricsReport& report);
MetricsReport report_from_json(std::string_view text);
std::string to_json(const CorpusResult& corpus);

std::string ccdf_to_csv(const std::vector<CcdfPoint>& ccdf);
std::string profile_to_csv(const ClusteringProfile& profile);
std::string profile_aggregate_to_csv(const ClusteringProfile& profile);
std::string betweenness_to_csv(const std::vector<NodeScore>& ranked);
std::string summary_to_csv(const SummaryTable& table);
std::string sweep_to_csv(const ThresholdSweep& sweep);
std::string trace_to_csv(const SisTrace& trace);

// report.json plus the per-table CSV files, all derived from the JSON text.
void write_csv_bundle(const std::string& report_json, const std::filesystem::path& dir);

}  // namespace cgm
