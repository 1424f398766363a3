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

// Serial vs OpenMP principal-minor histogram.

#include <benchmark/benchmark.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "mixedgraph/kernels.hpp"

namespace {

using mixedgraph::EdgeKind;
using mixedgraph::EdgeSpec;
using mixedgraph::MixedGraph;

// Random mixed graph with exactly m edges.
MixedGraph random_graph(std::size_t n, std::size_t m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  if (m > pairs.size()) throw std::invalid_argument("too many edges");
  std::shuffle(pairs.begin(), pairs.end(), rng);
  std::vector<EdgeSpec> specs;
  for (std::size_t k = 0; k < m; ++k) {
    const auto [u, v] = pairs[k];
    switch (rng() % 3) {
      case 0: specs.push_back({u, v, EdgeKind::Unoriented}); break;
      case 1: specs.push_back({u, v, EdgeKind::Oriented}); break;
      default: specs.push_back({v, u, EdgeKind::Oriented}); break;
    }
  }
  return MixedGraph(n, specs);
}

std::vector<std::size_t> all_vertices(std::size_t n) {
  std::vector<std::size_t> w(n);
  std::iota(w.begin(), w.end(), 0);
  return w;
}

template <class Fn>
void run(benchmark::State& state, Fn histogram) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const MixedGraph g = random_graph(n, 2 * n, 7 + n);
  const std::vector<std::size_t> w = all_vertices(n);
  const mixedgraph::TermHistogram ref = mixedgraph::principal_histogram_serial(g, w);
  const mixedgraph::TermHistogram got = histogram(g, w);
  if (mixedgraph::TermHistogram::weighted_sum(ref.s) != mixedgraph::TermHistogram::weighted_sum(got.s) ||
      mixedgraph::TermHistogram::weighted_sum(ref.t) != mixedgraph::TermHistogram::weighted_sum(got.t)) {
    state.SkipWithError("serial and parallel histograms disagree");
    return;
  }
  for (auto _ : state) benchmark::DoNotOptimize(histogram(g, w));
  state.counters["subsets"] = static_cast<double>(mixedgraph::binomial(g.edge_count(), n));
  state.counters["threads"] = mixedgraph::kernel_threads();
}

void BM_HistogramSerial(benchmark::State& state) { run(state, mixedgraph::principal_histogram_serial); }
void BM_HistogramParallel(benchmark::State& state) { run(state, mixedgraph::principal_histogram_parallel); }

}  // namespace

BENCHMARK(BM_HistogramSerial)->DenseRange(6, 10, 1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HistogramParallel)->DenseRange(6, 10, 1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
