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

#include "suites.hpp"

#include <algorithm>

namespace mixedgraph::testing {

MixedGraph graph_from_states(std::size_t n, const std::vector<int>& states) {
  std::vector<EdgeSpec> specs;
  std::size_t k = 0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b, ++k) {
      switch (states.at(k)) {
        case 1: specs.push_back({a, b, EdgeKind::Unoriented}); break;
        case 2: specs.push_back({a, b, EdgeKind::Oriented}); break;
        case 3: specs.push_back({b, a, EdgeKind::Oriented}); break;
        default: break;
      }
    }
  }
  return MixedGraph(n, specs);
}

std::vector<MixedGraph> exhaustive_graphs(std::size_t n) {
  const std::size_t pairs = n * (n - 1) / 2;
  std::vector<MixedGraph> out;
  std::vector<int> states(pairs, 0);
  for (;;) {
    out.push_back(graph_from_states(n, states));
    std::size_t j = 0;
    while (j < pairs && states[j] == 3) states[j++] = 0;
    if (j == pairs) break;
    ++states[j];
  }
  return out;
}

MixedGraph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution present(p);
  std::uniform_int_distribution<int> kind(1, 3);
  std::vector<int> states;
  for (std::size_t k = 0; k < n * (n - 1) / 2; ++k) states.push_back(present(rng) ? kind(rng) : 0);
  return graph_from_states(n, states);
}

MixedGraph random_graph_with_edges(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  const std::size_t pairs = n * (n - 1) / 2;
  std::vector<std::size_t> order(pairs);
  for (std::size_t k = 0; k < pairs; ++k) order[k] = k;
  std::shuffle(order.begin(), order.end(), rng);
  std::uniform_int_distribution<int> kind(1, 3);
  std::vector<int> states(pairs, 0);
  for (std::size_t k = 0; k < std::min(m, pairs); ++k) states[order[k]] = kind(rng);
  return graph_from_states(n, states);
}

std::vector<MixedGraph> random_suite(std::uint64_t seed, std::size_t count, std::size_t n_min, std::size_t n_max,
                                     double p) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size(n_min, n_max);
  std::vector<MixedGraph> out;
  for (std::size_t k = 0; k < count; ++k) out.push_back(random_graph(rng, size(rng), p));
  return out;
}

std::vector<std::vector<std::size_t>> all_subsets(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<std::size_t> w;
    for (std::size_t v = 0; v < n; ++v)
      if (mask >> v & 1) w.push_back(v);
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace mixedgraph::testing
