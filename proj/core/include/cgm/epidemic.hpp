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
#include <optional>
#include <span>
#include <vector>

#include "cgm/graph.hpp"

namespace cgm {

struct SpectralOptions {
  double tolerance = 1e-10;
  std::size_t max_iterations = 200000;
};

struct SpectralResult {
  double lambda1 = 0.0;
  double beta_c = 0.0;  // 1 / lambda1
  std::size_t iterations = 0;
  double residual = 0.0;  // ||A x - lambda1 x|| for the unit iterate x
  std::vector<double> eigenvector;  // unit norm, on the analysed component

  friend bool operator==(const SpectralResult&, const SpectralResult&) = default;
};

/// Largest adjacency eigenvalue of the symmetrized largest weakly connected
/// component, by power iteration from the all-ones vector on A + 0.5 I.
/// The shift keeps the iteration from stalling on bipartite graphs, whose
/// spectrum is symmetric. Converged when successive Rayleigh quotients
/// differ by at most the tolerance and the residual is within it too.
///
/// Throws PreconditionError on an edgeless graph, ConvergenceError when the
/// iteration budget runs out.
SpectralResult spectral_radius(const CallGraph& g, const SpectralOptions& options = {});

struct SisParams {
  double beta = 0.0;   // per-edge, per-step infection probability
  double delta = 0.0;  // per-step cure probability
  std::vector<NodeId> initial_infected;
  std::size_t max_steps = 1000;
  std::uint64_t seed = 0;
};

enum class SisOutcome { kExtinct, kSurvived };

struct SisTrace {
  std::vector<std::size_t> infected_per_step;  // entry 0 is the initial count
  SisOutcome outcome = SisOutcome::kSurvived;
  std::optional<std::size_t> extinction_step;
  std::vector<NodeId> final_infected;

  friend bool operator==(const SisTrace&, const SisTrace&) = default;
};

/// Discrete-time synchronous SIS on the symmetrized graph. In each step every
/// node infected at the start of the step tries each susceptible neighbour
/// with probability beta, then cures with probability delta; nodes infected
/// during the step are not eligible to cure until the next one. Stops at
/// extinction, at max_steps, or once every node is infected with delta == 0.
///
/// Throws InputError for an out-of-range or empty initial set, RangeError
/// for probabilities outside [0, 1] or max_steps == 0.
SisTrace sis_simulate(const CallGraph& g, const SisParams& params);

struct ThresholdSweep {
  std::vector<double> ratios;
  std::vector<double> extinction_prob;
  std::size_t runs_per_ratio = 0;

  friend bool operator==(const ThresholdSweep&, const ThresholdSweep&) = default;
};

// For each ratio r, `runs_per_ratio` simulations with beta = r * delta and
// seeds derived from (base.seed, ratio index, run index). Ratios must be
// nonempty and ascending, and r * delta must stay within [0, 1].
ThresholdSweep threshold_sweep(const CallGraph& g, std::span<const double> ratios,
                               std::size_t runs_per_ratio, const SisParams& base);

// Smallest ratio at which the linearly interpolated extinction probability
// drops to 0.5; empty when it never does.
std::optional<double> extinction_crossover(const ThresholdSweep& sweep);

struct SizeSpectrumPoint {
  std::size_t n = 0;
  double lambda1 = 0.0;

  friend bool operator==(const SizeSpectrumPoint&, const SizeSpectrumPoint&) = default;
};

struct SizeSpectrum {
  std::vector<SizeSpectrumPoint> points;  // sorted by n, stable
  // Spearman correlation with average ranks for ties. Empty with fewer than
  // two points; 0 when either ranking is constant.
  std::optional<double> rank_correlation;
};

SizeSpectrum lambda_vs_size(std::vector<SizeSpectrumPoint> points);

const char* to_string(SisOutcome outcome);

}  // namespace cgm
