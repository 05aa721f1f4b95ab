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

// Test fixtures that are generated rather than stored.
#pragma once

#include <filesystem>
#include <string>

#include "cgm/graph.hpp"

namespace cgm::testing {

std::filesystem::path fixture(const std::string& name);

// Fresh empty directory under the system temp dir.
std::filesystem::path scratch_dir(const std::string& tag);

// Stand-in for the kernel call graph of the corpus table: a random recursive
// tree plus preferentially attached extra calls, exactly 20165 functions and
// 70010 calls, weakly connected.
CallGraph kernel_standin(std::uint64_t seed = 1);
inline constexpr std::size_t kKernelN = 20165;
inline constexpr std::size_t kKernelM = 70010;

std::string slurp(const std::filesystem::path& path);

}  // namespace cgm::testing
