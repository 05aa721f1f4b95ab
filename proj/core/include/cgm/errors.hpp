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
#include <stdexcept>
#include <string>
#include <vector>

namespace cgm {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Well-formed but unusable input (empty graph, node id out of range, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

// Invalid generator specification.
class SpecError : public Error {
 public:
  using Error::Error;
};

// A metric's precondition does not hold on the given graph or sample.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A sample has no spread to fit (all values equal, boundary MLE).
class DegenerateSampleError : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

// Invalid tool configuration (bad flag values, mismatched baseline, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Loaded data does not match the counts declared for it.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Power iteration exhausted its budget. Carries the last iterate.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double estimate, double residual,
                   std::size_t iterations, std::vector<double> iterate)
      : Error(what),
        estimate_(estimate),
        residual_(residual),
        iterations_(iterations),
        iterate_(std::move(iterate)) {}

  double estimate() const noexcept { return estimate_; }
  double residual() const noexcept { return residual_; }
  std::size_t iterations() const noexcept { return iterations_; }
  const std::vector<double>& iterate() const noexcept { return iterate_; }

 private:
  double estimate_;
  double residual_;
  std::size_t iterations_;
  std::vector<double> iterate_;
};

}  // namespace cgm
