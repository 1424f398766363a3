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

#include "mixedgraph/matrices.hpp"

#include <stdexcept>

namespace mixedgraph {

namespace {
constexpr std::size_t kNoHead = static_cast<std::size_t>(-1);
}

OrientationMap OrientationMap::canonical(const MixedGraph& g) {
  OrientationMap m;
  m.heads_.assign(g.edge_count(), kNoHead);
  for (const EdgeRecord& e : g.edges()) {
    if (!e.oriented()) m.heads_[e.id] = std::min(e.u, e.v);
  }
  return m;
}

OrientationMap::OrientationMap(const MixedGraph& g, std::vector<std::size_t> heads) : heads_(std::move(heads)) {
  if (heads_.size() != g.edge_count()) throw std::invalid_argument("OrientationMap: wrong number of entries");
  if (!covers(g)) throw std::invalid_argument("OrientationMap: head is not an endpoint of its edge");
}

bool OrientationMap::covers(const MixedGraph& g) const {
  if (heads_.size() != g.edge_count()) return false;
  for (const EdgeRecord& e : g.edges()) {
    if (!e.oriented() && !e.touches(heads_[e.id])) return false;
  }
  return true;
}

OrientationMap OrientationMap::flipped(const MixedGraph& g, std::size_t edge_id) const {
  const EdgeRecord& e = g.edge(edge_id);
  if (e.oriented()) throw std::invalid_argument("OrientationMap::flipped: edge is originally oriented");
  OrientationMap m = *this;
  m.heads_[edge_id] = e.other(heads_[edge_id]);
  return m;
}

GMatrix hermitian_adjacency(const MixedGraph& g) {
  GMatrix h(g.vertex_count(), g.vertex_count());
  for (const EdgeRecord& e : g.edges()) {
    if (e.oriented()) {
      h(e.u, e.v) = GaussianInt(0, 1);
      h(e.v, e.u) = GaussianInt(0, -1);
    } else {
      h(e.u, e.v) = 1;
      h(e.v, e.u) = 1;
    }
  }
  return h;
}

GMatrix degree_matrix(const MixedGraph& g) {
  GMatrix d(g.vertex_count(), g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) d(v, v) = static_cast<std::int64_t>(g.degree(v));
  return d;
}

GMatrix hermitian_laplacian(const MixedGraph& g) { return degree_matrix(g) - hermitian_adjacency(g); }

GMatrix quasi_laplacian(const MixedGraph& g) { return degree_matrix(g) + hermitian_adjacency(g); }

GMatrix laplacian(const MixedGraph& g, Laplacian which) {
  return which == Laplacian::L ? hermitian_laplacian(g) : quasi_laplacian(g);
}

GaussianInt quasi_incidence_entry(const EdgeRecord& e, std::size_t vertex) {
  if (!e.touches(vertex)) return 0;
  if (e.oriented() && vertex == e.v) return {0, -1};
  return 1;
}

GaussianInt incidence_entry(const EdgeRecord& e, const OrientationMap& orient, std::size_t vertex) {
  if (!e.touches(vertex)) return 0;
  if (e.oriented()) return vertex == e.u ? GaussianInt(1) : GaussianInt(0, 1);
  return vertex == orient.head(e) ? 1 : -1;
}

GMatrix quasi_incidence(const MixedGraph& g) {
  GMatrix s(g.vertex_count(), g.edge_count());
  for (const EdgeRecord& e : g.edges()) {
    s(e.u, e.id) = quasi_incidence_entry(e, e.u);
    s(e.v, e.id) = quasi_incidence_entry(e, e.v);
  }
  return s;
}

GMatrix incidence(const MixedGraph& g, const OrientationMap& orient) {
  if (!orient.covers(g)) throw std::invalid_argument("incidence: orientation map does not cover every unoriented edge");
  GMatrix t(g.vertex_count(), g.edge_count());
  for (const EdgeRecord& e : g.edges()) {
    t(e.u, e.id) = incidence_entry(e, orient, e.u);
    t(e.v, e.id) = incidence_entry(e, orient, e.v);
  }
  return t;
}

GMatrix incidence_matrix(const MixedGraph& g, Incidence which, const OrientationMap& orient) {
  return which == Incidence::S ? quasi_incidence(g) : incidence(g, orient);
}

GMatrix underlying_laplacian(const MixedGraph& g) {
  GMatrix l = degree_matrix(g);
  for (const EdgeRecord& e : g.edges()) {
    l(e.u, e.v) = -1;
    l(e.v, e.u) = -1;
  }
  return l;
}

}  // namespace mixedgraph
