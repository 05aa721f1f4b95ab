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

#include "cgm/degree_fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cgm/errors.hpp"
#include "cgm/special.hpp"

namespace cgm {
namespace {

struct DistinctCount {
  std::uint64_t value;
  std::size_t count;
};

std::vector<std::uint64_t> sorted_positive(const DegreeSequence& seq) {
  std::vector<std::uint64_t> v;
  v.reserve(seq.values.size());
  for (std::uint64_t x : seq.values) {
    if (x > 0) v.push_back(x);
  }
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<DistinctCount> run_lengths(const std::vector<std::uint64_t>& sorted) {
  std::vector<DistinctCount> runs;
  for (std::uint64_t x : sorted) {
    if (runs.empty() || runs.back().value != x) {
      runs.push_back({x, 1});
    } else {
      ++runs.back().count;
    }
  }
  return runs;
}

// Tail [first, runs.end()) in sufficient-statistic form.
struct Tail {
  std::uint64_t x_min;
  std::size_t n;
  double sum_log;
};

double tail_log_likelihood(const Tail& t, double gamma) {
  return -static_cast<double>(t.n) * log_hurwitz_zeta(gamma, static_cast<double>(t.x_min)) -
         gamma * t.sum_log;
}

// The likelihood is concave in gamma (log-sum-exp of linear terms) and tends
// to -inf at both ends whenever the tail has spread, so bracket by doubling
// the distance from 1 and then run golden-section search.
double maximize_gamma(const Tail& t) {
  auto f = [&](double g) { return tail_log_likelihood(t, g); };
  double lo = 1.0 + 1e-9;
  double mid = 1.5;
  double hi = 2.0;
  double f_mid = f(mid);
  double f_hi = f(hi);
  while (f_hi > f_mid) {
    lo = mid;
    mid = hi;
    f_mid = f_hi;
    hi = 1.0 + 2.0 * (hi - 1.0);
    if (hi > 1e4) throw DegenerateSampleError("power-law likelihood has no interior maximum");
    f_hi = f(hi);
  }
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo;
  double b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > 1e-10 * (a + b)) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

// Largest CDF gap between the tail sample and the fitted law. Both CDFs are
// step functions on the integers, so it suffices to check each observed
// value and the integer just below the next observed value.
double ks_distance(const std::vector<DistinctCount>& runs, std::size_t first, std::size_t n_tail,
                   std::uint64_t x_min, double gamma) {
  const double log_norm = log_hurwitz_zeta(gamma, static_cast<double>(x_min));
  auto model_cdf = [&](std::uint64_t x) {
    return -std::expm1(log_hurwitz_zeta(gamma, static_cast<double>(x + 1)) - log_norm);
  };
  double d = 0.0;
  auto widen = [&d](double gap) {
    if (std::isnan(gap)) throw DegenerateSampleError("KS distance is not finite");
    d = std::max(d, gap);
  };
  std::size_t cumulative = 0;
  double prev_emp = 0.0;
  for (std::size_t i = first; i < runs.size(); ++i) {
    const std::uint64_t below = i > first ? runs[i - 1].value : x_min - 1;
    if (runs[i].value - 1 > below) {
      widen(std::abs(prev_emp - model_cdf(runs[i].value - 1)));
    }
    cumulative += runs[i].count;
    const double emp = static_cast<double>(cumulative) / static_cast<double>(n_tail);
    widen(std::abs(emp - model_cdf(runs[i].value)));
    prev_emp = emp;
  }
  return std::min(1.0, d);
}

std::size_t zero_count(const DegreeSequence& seq) {
  return static_cast<std::size_t>(std::count(seq.values.begin(), seq.values.end(), 0));
}

PowerLawFit fit_tail(const std::vector<DistinctCount>& runs, std::size_t first, std::size_t n_tail,
                     double sum_log, std::uint64_t x_min, std::size_t zeros) {
  const Tail tail{x_min, n_tail, sum_log};
  PowerLawFit fit;
  fit.x_min = tail.x_min;
  fit.n_tail = n_tail;
  fit.gamma = maximize_gamma(tail);
  fit.log_likelihood = tail_log_likelihood(tail, fit.gamma);
  fit.ks_stat = ks_distance(runs, first, n_tail, x_min, fit.gamma);
  fit.zero_count = zeros;
  return fit;
}

}  // namespace

DegreeSequence degree_sequence(const CallGraph& g, DegreeMode mode) {
  DegreeSequence seq;
  seq.mode = mode;
  seq.values.resize(g.n());
  for (NodeId v = 0; v < g.n(); ++v) {
    switch (mode) {
      case DegreeMode::kIn: seq.values[v] = g.in_degree(v); break;
      case DegreeMode::kOut: seq.values[v] = g.out_degree(v); break;
      case DegreeMode::kTotal:
        seq.values[v] = g.directed() ? g.in_degree(v) + g.out_degree(v) : g.out_degree(v);
        break;
    }
  }
  return seq;
}

std::vector<CcdfPoint> empirical_ccdf(const DegreeSequence& seq) {
  if (seq.values.empty()) throw PreconditionError("empirical CCDF of an empty sequence");
  std::vector<std::uint64_t> sorted = seq.values;
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  std::vector<CcdfPoint> out;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    out.push_back({sorted[i], static_cast<double>(sorted.size() - j) / n});
    i = j;
  }
  return out;
}

double power_law_log_likelihood(std::span<const std::uint64_t> values, double gamma,
                                std::uint64_t x_min) {
  Tail t{x_min, 0, 0.0};
  for (std::uint64_t x : values) {
    if (x >= x_min && x > 0) {
      ++t.n;
      t.sum_log += std::log(static_cast<double>(x));
    }
  }
  return tail_log_likelihood(t, gamma);
}

bool has_two_distinct_positive(const DegreeSequence& seq) {
  std::uint64_t first = 0;
  for (std::uint64_t x : seq.values) {
    if (x == 0) continue;
    if (first == 0) {
      first = x;
    } else if (x != first) {
      return true;
    }
  }
  return false;
}

PowerLawFit fit_power_law_at(const DegreeSequence& seq, std::uint64_t x_min) {
  if (x_min < 1) throw RangeError("power-law cutoff must be >= 1");
  const auto sorted = sorted_positive(seq);
  const auto runs = run_lengths(sorted);
  std::size_t first = 0;
  while (first < runs.size() && runs[first].value < x_min) ++first;
  if (runs.size() - first < 2) {
    throw DegenerateSampleError("power-law tail at x_min=" + std::to_string(x_min) +
                                " has fewer than two distinct values");
  }
  std::size_t n_tail = 0;
  double sum_log = 0.0;
  for (std::size_t i = first; i < runs.size(); ++i) {
    n_tail += runs[i].count;
    sum_log += static_cast<double>(runs[i].count) * std::log(static_cast<double>(runs[i].value));
  }
  return fit_tail(runs, first, n_tail, sum_log, x_min, zero_count(seq));
}

PowerLawFit fit_power_law(const DegreeSequence& seq) {
  if (!has_two_distinct_positive(seq)) {
    throw DegenerateSampleError("power-law fit needs at least two distinct positive degrees");
  }
  const auto sorted = sorted_positive(seq);
  const auto runs = run_lengths(sorted);
  const std::size_t zeros = zero_count(seq);

  // Suffix sufficient statistics, accumulated from the largest value down.
  std::vector<std::size_t> suffix_n(runs.size() + 1, 0);
  std::vector<double> suffix_log(runs.size() + 1, 0.0);
  for (std::size_t i = runs.size(); i-- > 0;) {
    suffix_n[i] = suffix_n[i + 1] + runs[i].count;
    suffix_log[i] = suffix_log[i + 1] +
                    static_cast<double>(runs[i].count) * std::log(static_cast<double>(runs[i].value));
  }

  // A cutoff whose likelihood has no usable maximum is not a candidate.
  std::optional<PowerLawFit> best;
  for (std::size_t first = 0; first + 1 < runs.size(); ++first) {
    try {
      PowerLawFit fit =
          fit_tail(runs, first, suffix_n[first], suffix_log[first], runs[first].value, zeros);
      if (!best || fit.ks_stat < best->ks_stat) best = fit;
    } catch (const DegenerateSampleError&) {
    }
  }
  if (!best) throw DegenerateSampleError("no cutoff admits a power-law fit");
  return *best;
}

ExponentialFit fit_exponential(const DegreeSequence& seq, std::uint64_t x_min) {
  std::size_t n = 0;
  double shifted_sum = 0.0;
  std::optional<std::uint64_t> first;
  bool spread = false;
  for (std::uint64_t x : seq.values) {
    if (x < x_min) continue;
    ++n;
    shifted_sum += static_cast<double>(x - x_min);
    if (!first) {
      first = x;
    } else if (x != *first) {
      spread = true;
    }
  }
  if (n == 0) throw RangeError("exponential fit: empty tail at x_min=" + std::to_string(x_min));
  if (n < 2 || !spread) {
    throw DegenerateSampleError("exponential fit: tail has no spread (MLE at the q = 1 boundary)");
  }
  ExponentialFit fit;
  fit.x_min = x_min;
  fit.n_tail = n;
  const double mean_shift = shifted_sum / static_cast<double>(n);
  fit.rate = 1.0 / (1.0 + mean_shift);
  fit.log_likelihood =
      static_cast<double>(n) * std::log(fit.rate) + shifted_sum * std::log1p(-fit.rate);
  return fit;
}

std::vector<double> power_law_pointwise(const PowerLawFit& fit,
                                        std::span<const std::uint64_t> values) {
  const double log_norm = log_hurwitz_zeta(fit.gamma, static_cast<double>(fit.x_min));
  std::vector<double> out;
  for (std::uint64_t x : values) {
    if (x >= fit.x_min && x > 0) {
      out.push_back(-fit.gamma * std::log(static_cast<double>(x)) - log_norm);
    }
  }
  return out;
}

std::vector<double> exponential_pointwise(const ExponentialFit& fit,
                                          std::span<const std::uint64_t> values) {
  const double log_q = std::log(fit.rate);
  const double log_fail = std::log1p(-fit.rate);
  std::vector<double> out;
  for (std::uint64_t x : values) {
    if (x >= fit.x_min && x > 0) {
      out.push_back(log_q + static_cast<double>(x - fit.x_min) * log_fail);
    }
  }
  return out;
}

FitComparison compare_log_likelihoods(std::span<const double> first,
                                      std::span<const double> second) {
  if (first.size() != second.size() || first.empty()) {
    throw PreconditionError("likelihood comparison needs two aligned, nonempty samples");
  }
  const std::size_t n = first.size();
  double lr = 0.0;
  for (std::size_t i = 0; i < n; ++i) lr += first[i] - second[i];
  const double mean = lr / static_cast<double>(n);
  double ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dev = (first[i] - second[i]) - mean;
    ss += dev * dev;
  }
  FitComparison out;
  out.lr = lr;
  const double sd = n > 1 ? std::sqrt(ss / static_cast<double>(n - 1)) : 0.0;
  out.normalized_lr = sd > 0.0 ? lr / (sd * std::sqrt(static_cast<double>(n))) : 0.0;
  if (out.normalized_lr >= 2.0) {
    out.verdict = FitVerdict::kPowerLaw;
  } else if (out.normalized_lr <= -2.0) {
    out.verdict = FitVerdict::kExponential;
  } else {
    out.verdict = FitVerdict::kInconclusive;
  }
  return out;
}

FitComparison compare_fits(const PowerLawFit& pl, const ExponentialFit& ex,
                           const DegreeSequence& seq) {
  if (pl.x_min != ex.x_min || pl.n_tail != ex.n_tail) {
    throw PreconditionError("fits were computed on different tails (x_min " +
                            std::to_string(pl.x_min) + " vs " + std::to_string(ex.x_min) + ")");
  }
  const auto a = power_law_pointwise(pl, seq.values);
  const auto b = exponential_pointwise(ex, seq.values);
  return compare_log_likelihoods(a, b);
}

DegreeSummary degree_summary(const DegreeSequence& seq) {
  if (seq.values.empty()) throw PreconditionError("degree summary of an empty sequence");
  DegreeSummary s;
  s.mode = seq.mode;
  std::uint64_t total = 0;
  for (std::uint64_t x : seq.values) total += x;
  const double n = static_cast<double>(seq.values.size());
  s.mean = static_cast<double>(total) / n;
  if (seq.values.size() > 1) {
    double ss = 0.0;
    for (std::uint64_t x : seq.values) {
      const double dev = static_cast<double>(x) - s.mean;
      ss += dev * dev;
    }
    s.variance = ss / (n - 1.0);
  }
  return s;
}

const char* to_string(DegreeMode mode) {
  switch (mode) {
    case DegreeMode::kIn: return "in";
    case DegreeMode::kOut: return "out";
    case DegreeMode::kTotal: return "total";
  }
  return "?";
}

const char* to_string(FitVerdict verdict) {
  switch (verdict) {
    case FitVerdict::kPowerLaw: return "power_law";
    case FitVerdict::kExponential: return "exponential";
    case FitVerdict::kInconclusive: return "inconclusive";
  }
  return "?";
}

}  // namespace cgm
