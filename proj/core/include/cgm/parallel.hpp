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
#include <functional>

namespace cgm {

// Worker count used by the parallel kernels. 0 means hardware concurrency.
void set_thread_count(std::size_t threads);
std::size_t thread_count();

// Runs body(chunk) for chunk in [0, chunks) on up to thread_count() threads.
// Chunk boundaries are the caller's, so results that are reduced per chunk
// in chunk order are independent of the thread count.
void parallel_chunks(std::size_t chunks, const std::function<void(std::size_t)>& body);

// Half-open range of `total` items owned by `chunk` of `chunks`.
struct ChunkRange {
  std::size_t begin;
  std::size_t end;
};
ChunkRange chunk_range(std::size_t total, std::size_t chunks, std::size_t chunk);

// Neumaier-compensated accumulator.
class CompensatedSum {
 public:
  void add(double x) noexcept;
  double value() const noexcept { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

}  // namespace cgm
