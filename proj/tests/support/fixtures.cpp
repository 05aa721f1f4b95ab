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

#include "fixtures.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "cgm/random.hpp"

namespace cgm::testing {

std::filesystem::path fixture(const std::string& name) {
  return std::filesystem::path(CGM_FIXTURE_DIR) / name;
}

std::filesystem::path scratch_dir(const std::string& tag) {
  const auto dir = std::filesystem::temp_directory_path() / ("cgm-test-" + tag);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

CallGraph kernel_standin(std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::string> names;
  names.reserve(kKernelN);
  for (std::size_t i = 0; i < kKernelN; ++i) names.push_back("f" + std::to_string(i));
  std::set<Edge> edges;
  std::vector<NodeId> callee_pool;  // one entry per incoming call, plus one per node
  for (NodeId v = 0; v < kKernelN; ++v) {
    if (v > 0) {
      const auto parent = static_cast<NodeId>(rng.below(v));
      edges.insert({parent, v});
      callee_pool.push_back(v);
    }
    callee_pool.push_back(v);
  }
  while (edges.size() < kKernelM) {
    const auto caller = static_cast<NodeId>(rng.below(kKernelN));
    const NodeId callee = callee_pool[rng.below(callee_pool.size())];
    if (caller == callee) continue;
    if (edges.insert({caller, callee}).second) callee_pool.push_back(callee);
  }
  return CallGraph::from_edges(std::move(names), {edges.begin(), edges.end()});
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace cgm::testing
