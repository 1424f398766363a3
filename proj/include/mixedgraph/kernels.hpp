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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mixedgraph/gaussian.hpp"
#include "mixedgraph/graph.hpp"

namespace mixedgraph {

// C(n, k); throws std::overflow_error past 2^64.
std::uint64_t binomial(std::size_t n, std::size_t k);

// Combination of rank `rank` among the C(n, k) k-subsets of 0..n-1 in
// lexicographic order.
std::vector<std::size_t> unrank_combination(std::size_t n, std::size_t k, std::uint64_t rank);

// Advances `idx` to the next k-subset of 0..n-1; false after the last.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n);

// Allocation-free classifier for square substructures, used in the hot
// enumeration loops. Works on its own union-find and leaf peeling, separate
// from components().
class SquareKernel {
 public:
  struct Result {
    bool sss = false;   // all pieces rootless trees or unicyclic not type III
    bool ssss = false;  // all pieces rootless trees or unicyclic not type V
    unsigned x = 0;     // unicyclic type I
    unsigned y = 0;     // unicyclic type II
    unsigned p = 0;     // unicyclic type I
    unsigned q = 0;     // unicyclic type IV
  };

  explicit SquareKernel(const MixedGraph& g);

  // `present[v]` marks the substructure's vertices, listed in `verts`.
  Result evaluate(std::span<const std::uint8_t> present, std::span<const std::size_t> verts,
                  std::span<const std::size_t> edges);

 private:
  std::size_t find(std::size_t v);

  const MixedGraph* g_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> nverts_;
  std::vector<std::size_t> nfull_;
  std::vector<std::size_t> ndangling_;
  std::vector<std::size_t> deg_;
  std::vector<std::uint8_t> cyclic_;
  std::vector<std::uint8_t> live_;
};

// counts[k] = number of qualifying square substructures on W with exponent k
// (x + 2y for S, p + 2q for T).
struct TermHistogram {
  std::vector<std::uint64_t> s;
  std::vector<std::uint64_t> t;

  void merge(const TermHistogram& other);
  // sum_k counts[k] * 2^k
  static BigInt weighted_sum(const std::vector<std::uint64_t>& counts);
  friend bool operator==(const TermHistogram&, const TermHistogram&) = default;
};

// Edges with at least one endpoint in W; any other edge is a zero column.
std::vector<std::size_t> edges_touching(const MixedGraph& g, std::span<const std::size_t> verts);

// Serial reference: every |W|-subset of the touching edges, lexicographic.
TermHistogram principal_histogram_serial(const MixedGraph& g, std::span<const std::size_t> w);

// Same sum with the subset rank space split into contiguous chunks across
// OpenMP threads; partial histograms are merged at the end.
TermHistogram principal_histogram_parallel(const MixedGraph& g, std::span<const std::size_t> w);

// Number of threads the parallel kernels will use.
int kernel_threads();

}  // namespace mixedgraph
