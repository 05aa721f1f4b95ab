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

#include "cgm/epidemic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "cgm/errors.hpp"
#include "cgm/parallel.hpp"
#include "cgm/random.hpp"
#include "cgm/transform.hpp"

namespace cgm {
namespace {

constexpr double kShift = 0.5;

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void check_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw RangeError(std::string(name) + " must lie in [0, 1], got " + std::to_string(p));
  }
}

// Average ranks (1-based), ties share the mean of their positions.
std::vector<double> average_ranks(const std::vector<double>& values) {
  std::vector<std::size_t> idx(values.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(values.size());
  for (std::size_t i = 0; i < idx.size();) {
    std::size_t j = i;
    while (j < idx.size() && values[idx[j]] == values[idx[i]]) ++j;
    const double rank = 0.5 * static_cast<double>(i + j - 1) + 1.0;
    for (std::size_t k = i; k < j; ++k) ranks[idx[k]] = rank;
    i = j;
  }
  return ranks;
}

}  // namespace

SpectralResult spectral_radius(const CallGraph& g, const SpectralOptions& options) {
  if (!(options.tolerance > 0.0)) throw RangeError("spectral tolerance must be positive");
  const CallGraph u = symmetrize(largest_wcc(g));
  if (u.m() == 0) throw PreconditionError("spectral radius of an edgeless graph");
  const std::size_t n = u.n();

  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> y(n);
  double previous = std::numeric_limits<double>::quiet_NaN();
  double lambda = 0.0;
  double residual = 0.0;
  for (std::size_t it = 1; it <= options.max_iterations; ++it) {
    // y = (A + shift I) x
    for (NodeId v = 0; v < n; ++v) {
      double s = kShift * x[v];
      for (NodeId w : u.successors(v)) s += x[w];
      y[v] = s;
    }
    const double rayleigh = dot(x, y);  // x has unit norm
    lambda = rayleigh - kShift;
    double r2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double r = y[i] - rayleigh * x[i];
      r2 += r * r;
    }
    residual = std::sqrt(r2);
    if (std::abs(rayleigh - previous) <= options.tolerance && residual <= options.tolerance) {
      SpectralResult out;
      out.lambda1 = lambda;
      out.beta_c = 1.0 / lambda;
      out.iterations = it;
      out.residual = residual;
      out.eigenvector = std::move(x);
      return out;
    }
    previous = rayleigh;
    const double norm = std::sqrt(dot(y, y));
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / norm;
  }
  throw ConvergenceError("power iteration did not converge in " +
                             std::to_string(options.max_iterations) + " iterations",
                         lambda, residual, options.max_iterations, std::move(x));
}

SisTrace sis_simulate(const CallGraph& g, const SisParams& params) {
  check_probability(params.beta, "beta");
  check_probability(params.delta, "delta");
  if (params.max_steps == 0) throw RangeError("max_steps must be at least 1");
  if (params.initial_infected.empty()) throw InputError("initial infected set is empty");
  const std::size_t n = g.n();
  for (NodeId v : params.initial_infected) {
    if (v >= n) throw InputError("initial infected node " + std::to_string(v) + " out of range");
  }
  const CallGraph u = symmetrize(g);

  std::vector<std::uint8_t> infected(n, 0);
  std::vector<std::uint8_t> fresh(n, 0);
  std::vector<NodeId> current = params.initial_infected;
  std::sort(current.begin(), current.end());
  current.erase(std::unique(current.begin(), current.end()), current.end());
  for (NodeId v : current) infected[v] = 1;

  Rng rng(params.seed);
  SisTrace trace;
  trace.infected_per_step.push_back(current.size());
  std::vector<NodeId> newly, next;
  for (std::size_t step = 1; step <= params.max_steps; ++step) {
    newly.clear();
    if (params.beta > 0.0) {
      for (NodeId v : current) {
        for (NodeId w : u.successors(v)) {
          if (infected[w] || fresh[w]) continue;
          if (rng.bernoulli(params.beta)) {
            fresh[w] = 1;
            newly.push_back(w);
          }
        }
      }
    }
    next.clear();
    for (NodeId v : current) {
      if (rng.bernoulli(params.delta)) {
        infected[v] = 0;
      } else {
        next.push_back(v);
      }
    }
    for (NodeId w : newly) {
      fresh[w] = 0;
      infected[w] = 1;
    }
    next.insert(next.end(), newly.begin(), newly.end());
    std::sort(next.begin(), next.end());
    current.swap(next);
    trace.infected_per_step.push_back(current.size());
    if (current.empty()) {
      trace.outcome = SisOutcome::kExtinct;
      trace.extinction_step = step;
      break;
    }
    if (params.delta == 0.0 && current.size() == n) break;
  }
  trace.final_infected = current;
  return trace;
}

ThresholdSweep threshold_sweep(const CallGraph& g, std::span<const double> ratios,
                               std::size_t runs_per_ratio, const SisParams& base) {
  if (ratios.empty()) throw RangeError("threshold sweep needs at least one ratio");
  if (!std::is_sorted(ratios.begin(), ratios.end())) {
    throw RangeError("threshold sweep ratios must be ascending");
  }
  if (runs_per_ratio == 0) throw RangeError("threshold sweep needs at least one run per ratio");
  for (double r : ratios) check_probability(r * base.delta, "beta = ratio * delta");

  ThresholdSweep out;
  out.ratios.assign(ratios.begin(), ratios.end());
  out.runs_per_ratio = runs_per_ratio;
  const std::size_t total = ratios.size() * runs_per_ratio;
  std::vector<std::uint8_t> extinct(total, 0);
  const std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(64, total));
  parallel_chunks(chunks, [&](std::size_t c) {
    const ChunkRange r = chunk_range(total, chunks, c);
    for (std::size_t job = r.begin; job < r.end; ++job) {
      const std::size_t ri = job / runs_per_ratio;
      const std::size_t run = job % runs_per_ratio;
      SisParams p = base;
      p.beta = ratios[ri] * base.delta;
      p.seed = derive_seed(base.seed, ri, run);
      extinct[job] = sis_simulate(g, p).outcome == SisOutcome::kExtinct ? 1 : 0;
    }
  });
  for (std::size_t ri = 0; ri < ratios.size(); ++ri) {
    std::size_t count = 0;
    for (std::size_t run = 0; run < runs_per_ratio; ++run) count += extinct[ri * runs_per_ratio + run];
    out.extinction_prob.push_back(static_cast<double>(count) / static_cast<double>(runs_per_ratio));
  }
  return out;
}

std::optional<double> extinction_crossover(const ThresholdSweep& sweep) {
  const auto& p = sweep.extinction_prob;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > 0.5) continue;
    if (i == 0) return sweep.ratios[0];
    const double t = (p[i - 1] - 0.5) / (p[i - 1] - p[i]);
    return sweep.ratios[i - 1] + t * (sweep.ratios[i] - sweep.ratios[i - 1]);
  }
  return std::nullopt;
}

SizeSpectrum lambda_vs_size(std::vector<SizeSpectrumPoint> points) {
  SizeSpectrum out;
  std::stable_sort(points.begin(), points.end(),
                   [](const auto& a, const auto& b) { return a.n < b.n; });
  out.points = std::move(points);
  if (out.points.size() < 2) return out;
  std::vector<double> sizes, lambdas;
  for (const auto& p : out.points) {
    sizes.push_back(static_cast<double>(p.n));
    lambdas.push_back(p.lambda1);
  }
  const auto rs = average_ranks(sizes);
  const auto rl = average_ranks(lambdas);
  const double mean = (static_cast<double>(rs.size()) + 1.0) / 2.0;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    sxy += (rs[i] - mean) * (rl[i] - mean);
    sxx += (rs[i] - mean) * (rs[i] - mean);
    syy += (rl[i] - mean) * (rl[i] - mean);
  }
  out.rank_correlation = sxx == 0.0 || syy == 0.0 ? 0.0 : sxy / std::sqrt(sxx * syy);
  return out;
}

const char* to_string(SisOutcome outcome) {
  return outcome == SisOutcome::kExtinct ? "extinct" : "survived";
}

}  // namespace cgm
