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
#include <span>
#include <string_view>
#include <vector>

#include "mixedgraph/graph.hpp"
#include "mixedgraph/matrices.hpp"

namespace mixedgraph {

// a: oriented edges traversed head -> tail, b: traversed tail -> head,
// c: unoriented edges.
struct CycleProfile {
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t c = 0;
  std::size_t length() const { return a + b + c; }
  friend bool operator==(const CycleProfile&, const CycleProfile&) = default;
};

// {I, II, III} governs S / Q_H; {I, IV, V} governs T / L_H.
enum class CycleTypeS { I, II, III };
enum class CycleTypeT { I, IV, V };

struct CycleTypes {
  CycleTypeS s;
  CycleTypeT t;
  friend bool operator==(const CycleTypes&, const CycleTypes&) = default;
};

std::string_view to_string(CycleTypeS t);
std::string_view to_string(CycleTypeT t);

// Throws std::invalid_argument if `cycle` is not a simple cycle of g.
CycleProfile cycle_profile(const MixedGraph& g, const Cycle& cycle);

CycleTypes classify_cycle(const CycleProfile& p);

// Closed form |det|^2 of the cycle's square incidence block: 2, 4 or 0 by
// type. The actual block determinant is computed as well and a mismatch
// throws std::logic_error. `orient` is only consulted for T.
unsigned cycle_det_normsq(const MixedGraph& g, const Cycle& cycle, Incidence which,
                          const OrientationMap& orient);
unsigned cycle_det_normsq(const MixedGraph& g, const Cycle& cycle, Incidence which);

// Swaps head and tail of every listed edge. Throws std::invalid_argument if
// an id is out of range or names an unoriented edge.
MixedGraph revert_edges(const MixedGraph& g, std::span<const std::size_t> edge_ids);

// Every simple cycle (length >= 3) in canonical orientation, ordered by
// vertex sequence.
std::vector<Cycle> simple_cycles(const MixedGraph& g);

// The cycle graph on 0..k-1 with edge j joining j and j+1 mod k. state[j]:
// 0 unoriented, 1 oriented j -> j+1, 2 oriented j+1 -> j.
MixedGraph cycle_graph(std::span<const int> states);
Cycle cycle_of_cycle_graph(std::size_t k);

}  // namespace mixedgraph
