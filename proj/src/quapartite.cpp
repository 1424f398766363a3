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

#include "mixedgraph/quapartite.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "mixedgraph/cycles.hpp"
#include "mixedgraph/gmatrix.hpp"

namespace mixedgraph {

namespace {

int step_class(int k, int by) { return ((k - 1 + by) % 4 + 4) % 4 + 1; }

bool all_cycles(const MixedGraph& g, bool want_iii) {
  for (const Cycle& c : simple_cycles(g)) {
    const CycleTypes t = classify_cycle(cycle_profile(g, c));
    if (want_iii ? t.s != CycleTypeS::III : t.t != CycleTypeT::V) return false;
  }
  return true;
}

}  // namespace

bool is_valid_quapartition(const MixedGraph& g, const QuadPartition& part) {
  if (part.label.size() != g.vertex_count()) return false;
  for (int l : part.label)
    if (l < 1 || l > 4) return false;
  for (const EdgeRecord& e : g.edges()) {
    const int lu = part.label[e.u], lv = part.label[e.v];
    if (e.oriented() ? lv != step_class(lu, 1) : lv != step_class(lu, 2)) return false;
  }
  return true;
}

std::optional<QuadPartition> find_quapartition(const MixedGraph& g) {
  QuadPartition part{std::vector<int>(g.vertex_count(), 0)};
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    if (part.label[s] != 0) continue;
    part.label[s] = 1;
    std::queue<std::size_t> q;
    q.push(s);
    while (!q.empty()) {
      const std::size_t x = q.front();
      q.pop();
      for (std::size_t id : g.incident(x)) {
        const EdgeRecord& e = g.edge(id);
        const std::size_t y = e.other(x);
        const int by = !e.oriented() ? 2 : (x == e.u ? 1 : -1);
        const int want = step_class(part.label[x], by);
        if (part.label[y] == 0) {
          part.label[y] = want;
          q.push(y);
        } else if (part.label[y] != want) {
          return std::nullopt;
        }
      }
    }
  }
  if (!is_valid_quapartition(g, part)) throw std::logic_error("find_quapartition: propagated labels are invalid");
  return part;
}

WalkWeight walk_weight(const MixedGraph& g, const Walk& walk) {
  if (walk.vertices.empty() || walk.vertices.size() != walk.edges.size() + 1) {
    throw std::invalid_argument("walk_weight: a walk needs one more vertex than edges");
  }
  WalkWeight w{walk};
  for (std::size_t j = 0; j < walk.edges.size(); ++j) {
    const std::size_t from = walk.vertices[j], to = walk.vertices[j + 1];
    if (walk.edges[j] >= g.edge_count() || from >= g.vertex_count() || to >= g.vertex_count()) {
      throw std::invalid_argument("walk_weight: unknown vertex or edge");
    }
    const EdgeRecord& e = g.edge(walk.edges[j]);
    if (from == to || !e.touches(from) || !e.touches(to)) {
      throw std::invalid_argument("walk_weight: edge " + std::to_string(e.id) + " does not join " +
                                  std::to_string(from) + " and " + std::to_string(to));
    }
    w.sum += !e.oriented() ? 2 : (e.u == from ? 1 : -1);
  }
  w.omega = static_cast<std::uint64_t>(w.sum < 0 ? -w.sum : w.sum);
  return w;
}

std::vector<ComponentLabeling> null_labeling(const MixedGraph& g, Laplacian which) {
  const GaussianInt i = GaussianInt::i();
  const GMatrix m = laplacian(g, which);
  std::vector<ComponentLabeling> out;
  for (const std::vector<std::size_t>& comp : g.connected_components()) {
    ComponentLabeling rec{comp, std::nullopt, false};
    std::vector<std::optional<GaussianInt>> x(g.vertex_count());
    bool consistent = true;
    x[comp.front()] = GaussianInt(1);
    std::queue<std::size_t> q;
    q.push(comp.front());
    while (!q.empty() && consistent) {
      const std::size_t a = q.front();
      q.pop();
      for (std::size_t id : g.incident(a)) {
        const EdgeRecord& e = g.edge(id);
        const std::size_t b = e.other(a);
        GaussianInt want;
        if (!e.oriented()) {
          want = which == Laplacian::Q ? -*x[a] : *x[a];
        } else if (which == Laplacian::Q) {
          // x_tail = i x_head
          want = a == e.u ? i * *x[a] : -i * *x[a];
        } else {
          // x_head = i x_tail
          want = a == e.u ? -i * *x[a] : i * *x[a];
        }
        if (!x[b]) {
          x[b] = want;
          q.push(b);
        } else if (*x[b] != want) {
          consistent = false;
          break;
        }
      }
    }
    const GMatrix block = submatrix(m, comp, comp);
    rec.singular = determinant(block).is_zero();
    if (consistent) {
      std::vector<GaussianInt> vec;
      GMatrix col(comp.size(), 1);
      for (std::size_t j = 0; j < comp.size(); ++j) {
        vec.push_back(*x[comp[j]]);
        col(j, 0) = vec.back();
      }
      if (!(block * col == GMatrix(comp.size(), 1))) {
        throw std::logic_error("null_labeling: labeling is not a null vector");
      }
      rec.x = std::move(vec);
    }
    if (rec.x.has_value() != rec.singular) {
      throw std::logic_error("null_labeling: labeling existence disagrees with the determinant");
    }
    out.push_back(std::move(rec));
  }
  return out;
}

bool EquivalenceReport::equivalences_hold() const {
  bool any_q = false, any_l = false, all_quap = true, all_iii = true, all_v = true;
  for (const ComponentEquivalence& c : components) {
    if (!c.holds()) return false;
    any_q = any_q || c.flags.det_q_zero;
    any_l = any_l || c.flags.det_l_zero;
    all_quap = all_quap && c.flags.quapartite;
    all_iii = all_iii && c.flags.all_cycles_type_iii;
    all_v = all_v && c.flags.all_cycles_type_v;
  }
  return whole.quapartite == all_quap && whole.all_cycles_type_iii == all_iii &&
         whole.all_cycles_type_v == all_v && whole.det_q_zero == any_q && whole.det_l_zero == any_l &&
         whole.quapartite == whole.all_cycles_type_iii;
}

EquivalenceReport equivalence_report(const MixedGraph& g) {
  EquivalenceReport rep;
  rep.whole.quapartite = find_quapartition(g).has_value();
  rep.whole.all_cycles_type_iii = all_cycles(g, true);
  rep.whole.all_cycles_type_v = all_cycles(g, false);
  rep.whole.det_q_zero = determinant(quasi_laplacian(g)).is_zero();
  rep.whole.det_l_zero = determinant(hermitian_laplacian(g)).is_zero();
  for (const std::vector<std::size_t>& comp : g.connected_components()) {
    const MixedGraph sub = g.induced(comp);
    ComponentEquivalence c{comp, {}};
    c.flags.quapartite = find_quapartition(sub).has_value();
    c.flags.all_cycles_type_iii = all_cycles(sub, true);
    c.flags.all_cycles_type_v = all_cycles(sub, false);
    c.flags.det_q_zero = determinant(quasi_laplacian(sub)).is_zero();
    c.flags.det_l_zero = determinant(hermitian_laplacian(sub)).is_zero();
    rep.components.push_back(std::move(c));
  }
  return rep;
}

}  // namespace mixedgraph
