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

// Umbrella header.
#pragma once

#include "cgm/degree_fit.hpp"
#include "cgm/epidemic.hpp"
#include "cgm/errors.hpp"
#include "cgm/generators.hpp"
#include "cgm/graph.hpp"
#include "cgm/io.hpp"
#include "cgm/parallel.hpp"
#include "cgm/paths.hpp"
#include "cgm/random.hpp"
#include "cgm/report.hpp"
#include "cgm/special.hpp"
#include "cgm/topology.hpp"
#include "cgm/transform.hpp"
