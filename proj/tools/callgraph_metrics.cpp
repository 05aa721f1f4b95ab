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

// callgraph-metrics: topological metrics for call graphs.
//
//   callgraph-metrics analyze  <graph>     full metric report
//   callgraph-metrics corpus   <manifest>  batch mode with a summary table
//   callgraph-metrics baseline <graph>     report plus random-graph comparison
//   callgraph-metrics simulate <graph>     one SIS run
//   callgraph-metrics sweep    <graph>     SIS extinction probability per beta/delta
//   callgraph-metrics generate             write a random graph as an edge list
//
// Exit codes: 0 ok, 1 partial failure, 2 input error, 3 config error.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cgm/cgm.hpp"
#include "json.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kPartial = 1;
constexpr int kInputError = 2;
constexpr int kConfigError = 3;

namespace fs = std::filesystem;
using nlohmann::json;

struct CommonOptions {
  std::string format;
  std::string metrics = "all";
  std::uint64_t seed = 0;
  std::string output = "json";
  std::string out;
  bool strict = false;
  bool directed_geodesics = false;
  std::size_t d_max = 4;
  double tolerance = 1e-10;
  std::size_t max_iterations = 200000;
  std::size_t threads = 0;
};

struct EpidemicOptions {
  double beta = 0.1;
  double delta = 0.2;
  std::string initial;
  std::size_t initial_count = 1;
  std::size_t max_steps = 1000;
  std::string ratios = "0.01,0.02,0.05,0.1,0.2,0.5,1,2,5,10";
  std::size_t runs = 100;
};

struct BaselineOptions {
  std::string model = "gnm";
  double gamma = 2.5;
  std::size_t replicates = 30;
};

void add_common(CLI::App* cmd, CommonOptions& o, bool metric_flags) {
  cmd->add_option("--format", o.format, "Input format (default: by extension)")
      ->check(CLI::IsMember({"edgelist", "dot"}));
  cmd->add_option("--seed", o.seed, "Random seed");
  cmd->add_option("--output", o.output, "Output format")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", o.out, "Output directory (default: JSON on stdout)");
  cmd->add_option("--threads", o.threads, "Worker threads for parallel kernels (0 = hardware)");
  if (!metric_flags) return;
  cmd->add_option("--metrics", o.metrics, "Comma-separated metric list or 'all'");
  cmd->add_flag("--strict", o.strict, "Exit 1 when any selected metric fails");
  cmd->add_flag("--directed-geodesics", o.directed_geodesics,
                "Directed shortest paths for the geodesic mean");
  cmd->add_option("--d-max", o.d_max, "Largest distance class of the clustering profile")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--tolerance", o.tolerance, "Spectral convergence tolerance")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-iterations", o.max_iterations, "Spectral iteration limit");
}

void add_epidemic(CLI::App* cmd, EpidemicOptions& o, bool sweep) {
  if (!sweep) cmd->add_option("--beta", o.beta, "Infection probability per edge and step");
  cmd->add_option("--delta", o.delta, "Cure probability per step");
  cmd->add_option("--initial", o.initial, "Comma-separated initially infected node names");
  cmd->add_option("--initial-count", o.initial_count,
                  "Seed the k highest-degree nodes when --initial is absent");
  cmd->add_option("--max-steps", o.max_steps, "Step limit per run");
  if (sweep) {
    cmd->add_option("--ratios", o.ratios, "Comma-separated beta/delta ratios, ascending");
    cmd->add_option("--runs", o.runs, "Runs per ratio");
  }
}

cgm::AnalysisConfig make_config(const CommonOptions& o, const std::string& input) {
  cgm::AnalysisConfig c;
  c.inputs.emplace_back(input);
  if (o.format == "dot") c.format = cgm::InputFormat::kDot;
  if (o.format == "edgelist") c.format = cgm::InputFormat::kEdgeList;
  c.metrics = cgm::parse_metric_list(o.metrics);
  c.directed_geodesics = o.directed_geodesics;
  c.seed = o.seed;
  c.tolerance = o.tolerance;
  c.max_iterations = o.max_iterations;
  c.d_max = o.d_max;
  c.output = o.output == "csv" ? cgm::OutputFormat::kCsv : cgm::OutputFormat::kJson;
  c.strict = o.strict;
  return c;
}

cgm::RandomModel parse_model(const std::string& name) {
  if (name == "gnm") return cgm::RandomModel::kErdosRenyiGnm;
  if (name == "configuration") return cgm::RandomModel::kErasedConfiguration;
  throw cgm::ConfigError("unknown model '" + name + "' (expected gnm or configuration)");
}

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    if (comma > start) out.push_back(text.substr(start, comma - start));
    start = comma + 1;
  }
  return out;
}

std::vector<double> parse_ratios(const std::string& text) {
  std::vector<double> out;
  for (const std::string& item : split(text)) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw cgm::ConfigError("bad ratio '" + item + "'");
    }
  }
  if (out.empty()) throw cgm::ConfigError("no ratios given");
  return out;
}

void write_file(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw cgm::InputError("cannot write '" + path.string() + "'");
  f << content;
}

// JSON to stdout, or to <out>/<name> when --out is set.
void emit_json(const CommonOptions& o, const char* name, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
  } else {
    write_file(fs::path(o.out) / name, text);
  }
}

void require_out_for_csv(const CommonOptions& o) {
  if (o.output == "csv" && o.out.empty()) throw cgm::ConfigError("--output csv requires --out <dir>");
}

int emit_report(const CommonOptions& o, const cgm::MetricsReport& report) {
  const std::string text = cgm::to_json(report);
  if (o.output == "csv") {
    cgm::write_csv_bundle(text, o.out);
  } else {
    emit_json(o, "report.json", text);
  }
  const auto failed = report.failed_metrics();
  for (const auto& name : failed) std::cerr << "warning: metric '" << name << "' was skipped\n";
  return o.strict && !failed.empty() ? kPartial : kOk;
}

int run_analyze(const CommonOptions& o, const std::string& input) {
  require_out_for_csv(o);
  return emit_report(o, cgm::analyze(make_config(o, input)));
}

int run_baseline(const CommonOptions& o, const BaselineOptions& b, const std::string& input) {
  require_out_for_csv(o);
  if (b.replicates < 2) throw cgm::ConfigError("baseline needs at least 2 replicates");
  cgm::AnalysisConfig config = make_config(o, input);
  cgm::RandomGraphSpec spec;
  spec.model = parse_model(b.model);
  spec.gamma = b.gamma;
  spec.seed = o.seed;
  config.baseline = spec;
  config.baseline_replicates = b.replicates;
  const cgm::MetricsReport report = cgm::analyze(config);
  if (!report.baseline.has_value()) {
    throw cgm::ConfigError("baseline failed: " + report.baseline.reason);
  }
  return emit_report(o, report);
}

int run_corpus(const CommonOptions& o, std::size_t jobs, const std::string& manifest) {
  require_out_for_csv(o);
  const fs::path manifest_path(manifest);
  const auto entries =
      cgm::parse_manifest(cgm::read_file(manifest_path), manifest_path.parent_path());
  cgm::AnalysisConfig config = make_config(o, manifest);
  config.inputs.clear();
  const cgm::CorpusResult result = cgm::analyze_corpus(entries, config, jobs);
  if (o.output == "csv") {
    write_file(fs::path(o.out) / "summary.csv", cgm::summary_to_csv(result.summary));
    for (const auto& e : result.entries) {
      if (e.report) cgm::write_csv_bundle(cgm::to_json(*e.report), fs::path(o.out) / e.entry.label);
    }
  } else {
    emit_json(o, "corpus.json", cgm::to_json(result));
  }
  bool partial = result.failure_count() > 0;
  for (const auto& e : result.entries) {
    if (e.failure) std::cerr << "error: " << e.entry.label << ": " << e.failure->error << "\n";
    if (o.strict && e.report && !e.report->failed_metrics().empty()) partial = true;
  }
  return partial ? kPartial : kOk;
}

cgm::CallGraph load_input(const CommonOptions& o, const std::string& input) {
  const fs::path path(input);
  cgm::InputFormat format = cgm::format_for_path(path);
  if (o.format == "dot") format = cgm::InputFormat::kDot;
  if (o.format == "edgelist") format = cgm::InputFormat::kEdgeList;
  return cgm::load_graph_file(path, format);
}

std::vector<cgm::NodeId> initial_nodes(const cgm::CallGraph& g, const EpidemicOptions& e) {
  std::vector<cgm::NodeId> out;
  if (!e.initial.empty()) {
    for (const std::string& name : split(e.initial)) {
      auto id = g.find(name);
      if (!id) throw cgm::InputError("unknown node '" + name + "'");
      out.push_back(*id);
    }
    return out;
  }
  if (e.initial_count == 0 || e.initial_count > g.n()) {
    throw cgm::ConfigError("--initial-count must be between 1 and " + std::to_string(g.n()));
  }
  const cgm::CallGraph u = cgm::symmetrize(g);
  std::vector<cgm::NodeId> order(g.n());
  for (cgm::NodeId v = 0; v < g.n(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](cgm::NodeId a, cgm::NodeId b) {
    return u.out_degree(a) > u.out_degree(b);
  });
  order.resize(e.initial_count);
  std::sort(order.begin(), order.end());
  return order;
}

cgm::SisParams sis_params(const cgm::CallGraph& g, const CommonOptions& o,
                          const EpidemicOptions& e) {
  cgm::SisParams p;
  p.beta = e.beta;
  p.delta = e.delta;
  p.initial_infected = initial_nodes(g, e);
  p.max_steps = e.max_steps;
  p.seed = o.seed;
  return p;
}

int run_simulate(const CommonOptions& o, const EpidemicOptions& e, const std::string& input) {
  require_out_for_csv(o);
  const cgm::CallGraph g = load_input(o, input);
  const cgm::SisParams params = sis_params(g, o, e);
  const cgm::SisTrace trace = cgm::sis_simulate(g, params);
  if (o.output == "csv") {
    write_file(fs::path(o.out) / "trace.csv", cgm::trace_to_csv(trace));
    return kOk;
  }
  json j;
  j["beta"] = params.beta;
  j["delta"] = params.delta;
  j["seed"] = params.seed;
  j["max_steps"] = params.max_steps;
  json initial = json::array();
  for (cgm::NodeId v : params.initial_infected) initial.push_back(g.name(v));
  j["initial_infected"] = initial;
  j["infected_per_step"] = trace.infected_per_step;
  j["outcome"] = cgm::to_string(trace.outcome);
  if (trace.extinction_step) {
    j["extinction_step"] = *trace.extinction_step;
  } else {
    j["extinction_step"] = {{"value", nullptr}, {"reason", "survived"}};
  }
  json final_set = json::array();
  for (cgm::NodeId v : trace.final_infected) final_set.push_back(g.name(v));
  j["final_infected"] = final_set;
  j["version"] = std::string(cgm::version());
  emit_json(o, "trace.json", j.dump(2) + "\n");
  return kOk;
}

int run_sweep(const CommonOptions& o, const EpidemicOptions& e, const std::string& input) {
  require_out_for_csv(o);
  const cgm::CallGraph g = load_input(o, input);
  const std::vector<double> ratios = parse_ratios(e.ratios);
  cgm::SisParams base = sis_params(g, o, e);
  const cgm::ThresholdSweep sweep = cgm::threshold_sweep(g, ratios, e.runs, base);
  if (o.output == "csv") {
    write_file(fs::path(o.out) / "sweep.csv", cgm::sweep_to_csv(sweep));
    return kOk;
  }
  json j;
  j["delta"] = base.delta;
  j["seed"] = base.seed;
  j["max_steps"] = base.max_steps;
  j["runs_per_ratio"] = sweep.runs_per_ratio;
  j["ratios"] = sweep.ratios;
  j["extinction_prob"] = sweep.extinction_prob;
  if (auto x = cgm::extinction_crossover(sweep)) {
    j["crossover_ratio"] = *x;
  } else {
    j["crossover_ratio"] = {{"value", nullptr}, {"reason", "no 50% crossing in the sweep"}};
  }
  try {
    const cgm::SpectralResult s = cgm::spectral_radius(cgm::largest_wcc(g));
    j["lambda1"] = s.lambda1;
    j["beta_c"] = s.beta_c;
  } catch (const cgm::Error& err) {
    j["lambda1"] = {{"value", nullptr}, {"reason", err.what()}};
    j["beta_c"] = {{"value", nullptr}, {"reason", err.what()}};
  }
  j["version"] = std::string(cgm::version());
  emit_json(o, "sweep.json", j.dump(2) + "\n");
  return kOk;
}

int run_generate(const BaselineOptions& b, std::size_t n, std::size_t m, std::uint64_t seed,
                 const std::string& out) {
  cgm::RandomGraphSpec spec;
  spec.model = parse_model(b.model);
  spec.n = n;
  spec.m = m;
  spec.gamma = b.gamma;
  spec.seed = seed;
  const std::string text = cgm::write_edge_list(cgm::generate_random(spec));
  if (out.empty()) {
    std::cout << text;
  } else {
    write_file(out, text);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Topological metrics for call graphs"};
  app.set_version_flag("--version", std::string(cgm::version()));
  app.require_subcommand(1);

  CommonOptions common;
  EpidemicOptions epidemic;
  BaselineOptions baseline;
  std::string input;
  std::size_t jobs = 1;

  auto* analyze = app.add_subcommand("analyze", "Analyse one graph");
  analyze->add_option("path", input, "Edge list or DOT file")->required();
  add_common(analyze, common, true);

  auto* corpus = app.add_subcommand("corpus", "Analyse every graph listed in a manifest");
  corpus->add_option("manifest", input, "Tab-separated manifest")->required();
  corpus->add_option("--jobs", jobs, "Entries analysed concurrently")->check(CLI::PositiveNumber);
  add_common(corpus, common, true);

  auto* base = app.add_subcommand("baseline", "Analyse one graph against random replicates");
  base->add_option("path", input, "Edge list or DOT file")->required();
  base->add_option("--model", baseline.model, "Random model: gnm or configuration");
  base->add_option("--gamma", baseline.gamma, "In-degree exponent for the configuration model");
  base->add_option("--replicates", baseline.replicates, "Random replicates");
  add_common(base, common, true);

  auto* simulate = app.add_subcommand("simulate", "Run one SIS simulation");
  simulate->add_option("path", input, "Edge list or DOT file")->required();
  add_common(simulate, common, false);
  add_epidemic(simulate, epidemic, false);

  auto* sweep = app.add_subcommand("sweep", "SIS extinction probability across beta/delta");
  sweep->add_option("path", input, "Edge list or DOT file")->required();
  add_common(sweep, common, false);
  add_epidemic(sweep, epidemic, true);

  std::size_t gen_n = 0;
  std::size_t gen_m = 0;
  std::string gen_out;
  auto* generate = app.add_subcommand("generate", "Write a seeded random graph as an edge list");
  generate->add_option("--model", baseline.model, "Random model: gnm or configuration");
  generate->add_option("--n", gen_n, "Node count")->required();
  generate->add_option("--m", gen_m, "Arc count (gnm)");
  generate->add_option("--gamma", baseline.gamma, "In-degree exponent (configuration)");
  generate->add_option("--seed", common.seed, "Random seed");
  generate->add_option("--out", gen_out, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (common.threads > 0) cgm::set_thread_count(common.threads);
    if (*analyze) return run_analyze(common, input);
    if (*corpus) return run_corpus(common, jobs, input);
    if (*base) return run_baseline(common, baseline, input);
    if (*simulate) return run_simulate(common, epidemic, input);
    if (*sweep) return run_sweep(common, epidemic, input);
    if (*generate) return run_generate(baseline, gen_n, gen_m, common.seed, gen_out);
  } catch (const cgm::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const cgm::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const cgm::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const cgm::SpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const cgm::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const cgm::RangeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const cgm::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kConfigError;
}
