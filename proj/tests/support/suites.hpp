// Copyright 2026 The mixedgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "mixedgraph/graph.hpp"

namespace mixedgraph::testing {

// Vertex pair states: 0 absent, 1 unoriented, 2 oriented low -> high,
// 3 oriented high -> low.
MixedGraph graph_from_states(std::size_t n, const std::vector<int>& states);

// All 4^{n(n-1)/2} mixed graphs on n labelled vertices.
std::vector<MixedGraph> exhaustive_graphs(std::size_t n);

// Each pair present with probability `p`; a present edge is unoriented,
// forward or backward with equal probability.
MixedGraph random_graph(std::mt19937_64& rng, std::size_t n, double p);

// Exactly m edges (m <= n(n-1)/2).
MixedGraph random_graph_with_edges(std::mt19937_64& rng, std::size_t n, std::size_t m);

std::vector<MixedGraph> random_suite(std::uint64_t seed, std::size_t count, std::size_t n_min, std::size_t n_max,
                                     double p = 0.5);

// Every subset of 0..n-1, ascending within each subset.
std::vector<std::vector<std::size_t>> all_subsets(std::size_t n);

}  // namespace mixedgraph::testing
