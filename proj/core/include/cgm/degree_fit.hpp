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
#include <span>
#include <utility>
#include <vector>

#include "cgm/graph.hpp"

namespace cgm {

enum class DegreeMode { kIn, kOut, kTotal };

struct DegreeSequence {
  DegreeMode mode = DegreeMode::kIn;
  std::vector<std::uint64_t> values;  // one per node, in node order

  std::size_t n() const noexcept { return values.size(); }
};

// Total degree is in + out on directed graphs and the adjacency count on
// undirected ones.
DegreeSequence degree_sequence(const CallGraph& g, DegreeMode mode);

struct CcdfPoint {
  std::uint64_t degree;
  double ccdf;  // fraction of samples strictly greater than `degree`

  friend bool operator==(const CcdfPoint&, const CcdfPoint&) = default;
};

// One point per distinct value, ascending. Throws PreconditionError on an
// empty sequence.
std::vector<CcdfPoint> empirical_ccdf(const DegreeSequence& seq);

/// Discrete power law P[X = x] = x^-gamma / zeta(gamma, x_min) on x >= x_min.
struct PowerLawFit {
  double gamma = 0.0;
  std::uint64_t x_min = 0;
  std::size_t n_tail = 0;
  double log_likelihood = 0.0;
  double ks_stat = 0.0;
  std::size_t zero_count = 0;  // zero degrees, excluded from every tail

  friend bool operator==(const PowerLawFit&, const PowerLawFit&) = default;
};

/// Geometric tail P[X = x] = q (1 - q)^(x - x_min) on x >= x_min.
struct ExponentialFit {
  double rate = 0.0;  // q
  std::uint64_t x_min = 0;
  std::size_t n_tail = 0;
  double log_likelihood = 0.0;

  friend bool operator==(const ExponentialFit&, const ExponentialFit&) = default;
};

enum class FitVerdict { kPowerLaw, kExponential, kInconclusive };

struct FitComparison {
  double lr = 0.0;             // sum of per-sample log-likelihood differences
  double normalized_lr = 0.0;  // lr / (sd * sqrt(n_tail))
  FitVerdict verdict = FitVerdict::kInconclusive;

  friend bool operator==(const FitComparison&, const FitComparison&) = default;
};

struct DegreeSummary {
  DegreeMode mode = DegreeMode::kIn;
  double mean = 0.0;
  double variance = 0.0;  // unbiased; 0 for a single sample

  friend bool operator==(const DegreeSummary&, const DegreeSummary&) = default;
};

// Log-likelihood of the tail of `values` (entries >= x_min) under a discrete
// power law. Exposed for oracles and grid searches.
double power_law_log_likelihood(std::span<const std::uint64_t> values,
                                double gamma, std::uint64_t x_min);

// Maximum-likelihood gamma for a fixed cutoff. The tail must hold at least
// two distinct values.
PowerLawFit fit_power_law_at(const DegreeSequence& seq, std::uint64_t x_min);

/// Scans every distinct positive degree as a cutoff, fits gamma by maximum
/// likelihood at each, and keeps the fit with the smallest KS distance
/// (smallest cutoff on ties). Cutoffs whose tail has fewer than two distinct
/// values are not candidates.
///
/// Throws DegenerateSampleError when fewer than two distinct positive
/// degrees exist.
PowerLawFit fit_power_law(const DegreeSequence& seq);

// Geometric MLE q = 1 / (1 + mean(x - x_min)) over the tail x >= x_min.
// Empty tail: RangeError. Fewer than two samples or zero spread:
// DegenerateSampleError.
ExponentialFit fit_exponential(const DegreeSequence& seq, std::uint64_t x_min);

// Per-sample log-likelihoods over the tail, in sequence order.
std::vector<double> power_law_pointwise(const PowerLawFit& fit,
                                        std::span<const std::uint64_t> values);
std::vector<double> exponential_pointwise(const ExponentialFit& fit,
                                          std::span<const std::uint64_t> values);

// Vuong-style comparison of two aligned per-sample log-likelihood vectors:
// positive favours `first`. `verdict` is kPowerLaw when first wins, so only
// meaningful through compare_fits.
FitComparison compare_log_likelihoods(std::span<const double> first,
                                      std::span<const double> second);

// Both fits must share x_min (PreconditionError otherwise).
FitComparison compare_fits(const PowerLawFit& pl, const ExponentialFit& ex,
                           const DegreeSequence& seq);

DegreeSummary degree_summary(const DegreeSequence& seq);

// Rejects sequences that the power-law fit cannot use; cheap pre-check.
bool has_two_distinct_positive(const DegreeSequence& seq);

const char* to_string(DegreeMode mode);
const char* to_string(FitVerdict verdict);

}  // namespace cgm
