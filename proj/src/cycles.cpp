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

#include "mixedgraph/cycles.hpp"

#include <algorithm>
#include <stdexcept>

#include "mixedgraph/gmatrix.hpp"

namespace mixedgraph {

std::string_view to_string(CycleTypeS t) {
  switch (t) {
    case CycleTypeS::I: return "I";
    case CycleTypeS::II: return "II";
    default: return "III";
  }
}

std::string_view to_string(CycleTypeT t) {
  switch (t) {
    case CycleTypeT::I: return "I";
    case CycleTypeT::IV: return "IV";
    default: return "V";
  }
}

CycleProfile cycle_profile(const MixedGraph& g, const Cycle& cycle) {
  const std::size_t k = cycle.vertices.size();
  if (k < 3 || cycle.edges.size() != k) throw std::invalid_argument("cycle_profile: a cycle needs >= 3 vertices and as many edges");
  std::vector<std::size_t> sorted = cycle.vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("cycle_profile: repeated vertex");
  }
  CycleProfile p;
  for (std::size_t j = 0; j < k; ++j) {
    const std::size_t from = cycle.vertices[j];
    const std::size_t to = cycle.vertices[(j + 1) % k];
    if (cycle.edges[j] >= g.edge_count()) throw std::invalid_argument("cycle_profile: unknown edge");
    const EdgeRecord& e = g.edge(cycle.edges[j]);
    if (!(e.touches(from) && e.touches(to))) throw std::invalid_argument("cycle_profile: edge does not join consecutive vertices");
    if (!e.oriented()) {
      ++p.c;
    } else if (e.u == from) {
      ++p.a;
    } else {
      ++p.b;
    }
  }
  return p;
}

CycleTypes classify_cycle(const CycleProfile& p) {
  if ((p.a + p.b) % 2 == 1) return {CycleTypeS::I, CycleTypeT::I};
  const std::size_t half = (p.a > p.b ? p.a - p.b : p.b - p.a) / 2;
  return {(half + p.c) % 2 == 1 ? CycleTypeS::II : CycleTypeS::III,
          half % 2 == 1 ? CycleTypeT::IV : CycleTypeT::V};
}

unsigned cycle_det_normsq(const MixedGraph& g, const Cycle& cycle, Incidence which,
                          const OrientationMap& orient) {
  const CycleTypes types = classify_cycle(cycle_profile(g, cycle));
  unsigned closed = 0;
  if (which == Incidence::S) {
    closed = types.s == CycleTypeS::I ? 2 : types.s == CycleTypeS::II ? 4 : 0;
  } else {
    closed = types.t == CycleTypeT::I ? 2 : types.t == CycleTypeT::IV ? 4 : 0;
  }
  const GMatrix block = submatrix(incidence_matrix(g, which, orient), cycle.vertices, cycle.edges);
  const BigInt actual = determinant(block).norm_sq();
  if (actual != closed) {
    throw std::logic_error("cycle_det_normsq: closed form " + std::to_string(closed) +
                           " disagrees with determinant norm " + actual.str());
  }
  return closed;
}

unsigned cycle_det_normsq(const MixedGraph& g, const Cycle& cycle, Incidence which) {
  return cycle_det_normsq(g, cycle, which, OrientationMap::canonical(g));
}

MixedGraph revert_edges(const MixedGraph& g, std::span<const std::size_t> edge_ids) {
  std::vector<EdgeSpec> specs = g.edge_specs();
  for (std::size_t id : edge_ids) {
    if (id >= specs.size()) throw std::invalid_argument("revert_edges: unknown edge id " + std::to_string(id));
    if (specs[id].kind != EdgeKind::Oriented) {
      throw std::invalid_argument("revert_edges: edge " + std::to_string(id) + " is unoriented");
    }
    std::swap(specs[id].u, specs[id].v);
  }
  return MixedGraph(g.vertex_count(), specs, g.labels());
}

namespace {

// Cycles whose smallest vertex is `start`, extended only through larger
// vertices; each cycle is found twice (once per direction) and kept when the
// second vertex is smaller than the last.
void extend(const MixedGraph& g, std::size_t start, std::vector<std::size_t>& path,
            std::vector<std::size_t>& path_edges, std::vector<bool>& on_path, std::vector<Cycle>& out) {
  const std::size_t x = path.back();
  for (std::size_t id : g.incident(x)) {
    const std::size_t y = g.edge(id).other(x);
    if (y == start && path.size() >= 3 && path[1] < path.back()) {
      Cycle c{path, path_edges};
      c.edges.push_back(id);
      out.push_back(std::move(c));
    } else if (y > start && !on_path[y]) {
      on_path[y] = true;
      path.push_back(y);
      path_edges.push_back(id);
      extend(g, start, path, path_edges, on_path, out);
      path.pop_back();
      path_edges.pop_back();
      on_path[y] = false;
    }
  }
}

}  // namespace

std::vector<Cycle> simple_cycles(const MixedGraph& g) {
  std::vector<Cycle> out;
  std::vector<bool> on_path(g.vertex_count(), false);
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    std::vector<std::size_t> path{s};
    std::vector<std::size_t> path_edges;
    on_path[s] = true;
    extend(g, s, path, path_edges, on_path, out);
    on_path[s] = false;
  }
  std::sort(out.begin(), out.end(), [](const Cycle& x, const Cycle& y) { return x.vertices < y.vertices; });
  return out;
}

MixedGraph cycle_graph(std::span<const int> states) {
  const std::size_t k = states.size();
  std::vector<EdgeSpec> specs;
  for (std::size_t j = 0; j < k; ++j) {
    const std::size_t next = (j + 1) % k;
    switch (states[j]) {
      case 0: specs.push_back({j, next, EdgeKind::Unoriented}); break;
      case 1: specs.push_back({j, next, EdgeKind::Oriented}); break;
      case 2: specs.push_back({next, j, EdgeKind::Oriented}); break;
      default: throw std::invalid_argument("cycle_graph: edge state must be 0, 1 or 2");
    }
  }
  return MixedGraph(k, specs);
}

Cycle cycle_of_cycle_graph(std::size_t k) {
  Cycle c;
  for (std::size_t j = 0; j < k; ++j) {
    c.vertices.push_back(j);
    c.edges.push_back(j);
  }
  return c;
}

}  // namespace mixedgraph
