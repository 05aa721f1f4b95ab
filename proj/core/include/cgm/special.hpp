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

#include <cstdint>

namespace cgm {

// Hurwitz zeta sum_{k>=0} (q + k)^-s for s > 1, q > 0.
double hurwitz_zeta(double s, double q);

// log of hurwitz_zeta, finite even where the sum itself underflows.
double log_hurwitz_zeta(double s, double q);

// Samples from P[X = x] = x^-gamma / zeta(gamma, x_min), x >= x_min, by
// inverting the tail function. Values are capped at `cap`.
class DiscretePowerLawSampler {
 public:
  DiscretePowerLawSampler(double gamma, std::uint64_t x_min, std::uint64_t cap);

  // `u` uniform in [0, 1).
  std::uint64_t operator()(double u) const;

 private:
  double tail(std::uint64_t x) const;  // P[X >= x]
  std::uint64_t bisect(std::uint64_t lo, std::uint64_t hi, double u) const;

  double gamma_;
  std::uint64_t x_min_;
  std::uint64_t cap_;
  double log_norm_;
};

}  // namespace cgm
