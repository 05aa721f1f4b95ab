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

#include "cgm/special.hpp"

#include <algorithm>
#include <cmath>

#include "cgm/errors.hpp"

namespace cgm {
namespace {

// B_{2j} for j = 1..8.
constexpr double kBernoulli[] = {1.0 / 6.0,    -1.0 / 30.0,      1.0 / 42.0, -1.0 / 30.0,
                                 5.0 / 66.0,   -691.0 / 2730.0, 7.0 / 6.0,  -3617.0 / 510.0};

// Euler-Maclaurin: direct sum of the first N terms, integral and endpoint
// correction for the rest. Shifting the remainder to a >= max(10, s) keeps
// the correction series convergent for large exponents. With `scaled` every
// term is multiplied by q^s, which keeps large exponents from underflowing.
double hurwitz_sum(double s, double q, bool scaled) {
  if (!(s > 1.0) || !(q > 0.0)) throw RangeError("hurwitz_zeta requires s > 1 and q > 0");
  const double log_q = std::log(q);
  auto power = [&](double x) { return scaled ? std::exp(-s * (std::log(x) - log_q)) : std::pow(x, -s); };
  const double start = std::max(10.0, std::ceil(s));
  const auto terms = static_cast<std::size_t>(std::max(0.0, std::ceil(start - q)));
  double head = 0.0;
  // Summing from the smallest term up limits rounding.
  for (std::size_t k = terms; k-- > 0;) head += power(q + static_cast<double>(k));

  const double a = q + static_cast<double>(terms);
  const double a_pow = power(a);
  double tail = a * a_pow / (s - 1.0) + 0.5 * a_pow;

  // term_j = B_2j / (2j)! * s (s+1) ... (s+2j-2) * a^(-s-2j+1)
  double factor = s * a_pow / a / 2.0;  // j = 1 without the Bernoulli number
  for (int j = 1; j <= 8; ++j) {
    const double term = kBernoulli[j - 1] * factor;
    tail += term;
    if (std::abs(term) < 1e-17 * std::abs(head + tail)) break;
    const double k = 2.0 * j;
    factor *= (s + k - 1.0) * (s + k) / ((k + 1.0) * (k + 2.0)) / (a * a);
  }
  return head + tail;
}

}  // namespace

double hurwitz_zeta(double s, double q) { return hurwitz_sum(s, q, false); }

double log_hurwitz_zeta(double s, double q) {
  return -s * std::log(q) + std::log(hurwitz_sum(s, q, true));
}

DiscretePowerLawSampler::DiscretePowerLawSampler(double gamma, std::uint64_t x_min,
                                                 std::uint64_t cap)
    : gamma_(gamma), x_min_(x_min), cap_(cap) {
  if (!(gamma > 1.0)) throw RangeError("power-law exponent must exceed 1");
  if (x_min < 1 || cap < x_min) throw RangeError("power-law support must satisfy 1 <= x_min <= cap");
  log_norm_ = log_hurwitz_zeta(gamma_, static_cast<double>(x_min_));
}

double DiscretePowerLawSampler::tail(std::uint64_t x) const {
  return std::exp(log_hurwitz_zeta(gamma_, static_cast<double>(x)) - log_norm_);
}

// Largest x in [x_min, cap] with P[X >= x] > u, by doubling then bisection.
std::uint64_t DiscretePowerLawSampler::operator()(double u) const {
  std::uint64_t lo = x_min_;  // tail(x_min) = 1 > u
  while (lo < cap_) {
    const std::uint64_t next = std::min(cap_, lo * 2);
    if (tail(next) <= u) return bisect(lo, next, u);
    lo = next;
  }
  return cap_;
}

// Invariant: tail(lo) > u >= tail(hi).
std::uint64_t DiscretePowerLawSampler::bisect(std::uint64_t lo, std::uint64_t hi, double u) const {
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (tail(mid) > u) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

}  // namespace cgm
