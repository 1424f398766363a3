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
#include <optional>
#include <vector>

#include "mixedgraph/gaussian.hpp"
#include "mixedgraph/graph.hpp"
#include "mixedgraph/matrices.hpp"

namespace mixedgraph {

// label[v] in {1, 2, 3, 4}. Unoriented edges join classes 1-3 or 2-4; an
// oriented edge with head in class k has its tail in class k+1 (4 wraps to 1).
struct QuadPartition {
  std::vector<int> label;
};

bool is_valid_quapartition(const MixedGraph& g, const QuadPartition& part);

// Seeds the smallest vertex of each component with 1 and propagates. Absent
// on a conflict. The result is checked with is_valid_quapartition.
std::optional<QuadPartition> find_quapartition(const MixedGraph& g);

struct Walk {
  std::vector<std::size_t> vertices;  // v0 .. vk
  std::vector<std::size_t> edges;     // e_j joins v_j and v_{j+1}
};

struct WalkWeight {
  Walk walk;
  std::int64_t sum = 0;     // +1 head->tail, -1 tail->head, +2 unoriented
  std::uint64_t omega = 0;  // |sum|
};

// Throws std::invalid_argument if the walk does not exist in g.
WalkWeight walk_weight(const MixedGraph& g, const Walk& walk);

struct ComponentLabeling {
  std::vector<std::size_t> verts;
  // x[j] in {1, i, -1, -i} for verts[j], when the constraints are consistent.
  std::optional<std::vector<GaussianInt>> x;
  bool singular = false;  // det of the component's principal block is zero
};

// Q: x_v = -x_u across unoriented edges, x_v = i x_u across u -> v.
// L: x_v = x_u across unoriented edges, x_u = i x_v across u -> v.
// One record per connected component. A labeling that exists is checked to
// be a null vector of the component block, and its existence is checked
// against the block determinant; std::logic_error on either failure.
std::vector<ComponentLabeling> null_labeling(const MixedGraph& g, Laplacian which);

struct EquivalenceFlags {
  bool quapartite = false;
  bool all_cycles_type_iii = false;
  bool det_q_zero = false;
  bool all_cycles_type_v = false;
  bool det_l_zero = false;
};

struct ComponentEquivalence {
  std::vector<std::size_t> verts;
  EquivalenceFlags flags;
  bool holds() const {
    return flags.quapartite == flags.all_cycles_type_iii && flags.quapartite == flags.det_q_zero &&
           flags.all_cycles_type_v == flags.det_l_zero;
  }
};

// Whole-graph flags are computed directly (partition search, all simple
// cycles, full determinants). Per-component records carry the same five
// flags for each connected component; the equivalences are asserted there,
// since a full determinant vanishes as soon as one component block does.
struct EquivalenceReport {
  EquivalenceFlags whole;
  std::vector<ComponentEquivalence> components;
  bool equivalences_hold() const;
};

EquivalenceReport equivalence_report(const MixedGraph& g);

}  // namespace mixedgraph
