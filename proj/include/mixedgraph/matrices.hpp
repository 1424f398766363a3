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
#include <vector>

#include "mixedgraph/gmatrix.hpp"
#include "mixedgraph/graph.hpp"

namespace mixedgraph {

// Chosen head for every unoriented edge ("new oriented edges"). Entries for
// oriented edges are unused.
class OrientationMap {
 public:
  // Each unoriented edge oriented from its lower to its higher vertex index.
  static OrientationMap canonical(const MixedGraph& g);
  // `heads[id]` for every edge id; must name an endpoint for unoriented edges.
  OrientationMap(const MixedGraph& g, std::vector<std::size_t> heads);

  std::size_t head(const EdgeRecord& e) const { return heads_.at(e.id); }
  std::size_t tail(const EdgeRecord& e) const { return e.other(heads_.at(e.id)); }
  bool covers(const MixedGraph& g) const;

  OrientationMap flipped(const MixedGraph& g, std::size_t edge_id) const;

 private:
  OrientationMap() = default;
  std::vector<std::size_t> heads_;
};

enum class Incidence { S, T };
enum class Laplacian { L, Q };

GMatrix hermitian_adjacency(const MixedGraph& g);
GMatrix degree_matrix(const MixedGraph& g);
GMatrix hermitian_laplacian(const MixedGraph& g);
GMatrix quasi_laplacian(const MixedGraph& g);
GMatrix laplacian(const MixedGraph& g, Laplacian which);

// s(vertex, e): 1 for either end of an unoriented edge or the head of an
// oriented one, -i for the tail of an oriented edge, 0 off the edge.
GaussianInt quasi_incidence_entry(const EdgeRecord& e, std::size_t vertex);
// t(vertex, e): 1 at any head, -1 at the tail of a newly oriented edge,
// i at the tail of an originally oriented edge, 0 off the edge.
GaussianInt incidence_entry(const EdgeRecord& e, const OrientationMap& orient, std::size_t vertex);

// n x m, columns in edge id order.
GMatrix quasi_incidence(const MixedGraph& g);
// Throws std::invalid_argument if `orient` does not cover g.
GMatrix incidence(const MixedGraph& g, const OrientationMap& orient);
GMatrix incidence_matrix(const MixedGraph& g, Incidence which, const OrientationMap& orient);

// Classical Laplacian of the underlying unoriented graph.
GMatrix underlying_laplacian(const MixedGraph& g);

}  // namespace mixedgraph
