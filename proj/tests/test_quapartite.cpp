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

#include <queue>
#include <random>
#include <stdexcept>

#include "gtest/gtest.h"
#include "mixedgraph/cycles.hpp"
#include "support/suites.hpp"

namespace mixedgraph {
namespace {

const GaussianInt I(0, 1);
constexpr EdgeKind D = EdgeKind::Oriented;
constexpr EdgeKind U = EdgeKind::Unoriented;

MixedGraph directed_c3() { return MixedGraph(3, {{0, 1, D}, {1, 2, D}, {2, 0, D}}); }
MixedGraph mixed_triangle() { return MixedGraph(3, {{0, 1, D}, {1, 2, D}, {2, 0, U}}); }
MixedGraph c4d() { return MixedGraph(4, {{0, 1, D}, {1, 2, D}, {2, 3, D}, {3, 0, D}}); }
MixedGraph c4u() { return MixedGraph(4, {{0, 1, U}, {1, 2, U}, {2, 3, U}, {3, 0, U}}); }

bool connected(const MixedGraph& g) { return g.connected_components().size() <= 1; }

bool bipartite(const MixedGraph& g) {
  std::vector<int> side(g.vertex_count(), -1);
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::queue<std::size_t> q;
    q.push(s);
    while (!q.empty()) {
      const std::size_t x = q.front();
      q.pop();
      for (std::size_t id : g.incident(x)) {
        const std::size_t y = g.edge(id).other(x);
        if (side[y] < 0) {
          side[y] = 1 - side[x];
          q.push(y);
        } else if (side[y] == side[x]) {
          return false;
        }
      }
    }
  }
  return true;
}

TEST(FindQuapartition, Examples) {
  auto p = find_quapartition(c4d());
  ASSERT_TRUE(p);
  EXPECT_EQ(p->label, (std::vector<int>{1, 2, 3, 4}));
  p = find_quapartition(mixed_triangle());
  ASSERT_TRUE(p);
  EXPECT_EQ(p->label, (std::vector<int>{1, 2, 3}));
  EXPECT_FALSE(find_quapartition(directed_c3()));
  EXPECT_FALSE(is_valid_quapartition(c4d(), QuadPartition{{1, 2, 3, 3}}));
  EXPECT_FALSE(is_valid_quapartition(c4d(), QuadPartition{{1, 2, 3}}));
}

TEST(WalkWeight, Examples) {
  EXPECT_EQ(walk_weight(c4d(), Walk{{0, 1, 2, 3, 0}, {0, 1, 2, 3}}).omega, 4u);
  const MixedGraph u(2, {{0, 1, U}});
  EXPECT_EQ(walk_weight(u, Walk{{0, 1, 0}, {0, 0}}).omega, 4u);
  const MixedGraph d(2, {{0, 1, D}});
  const WalkWeight w = walk_weight(d, Walk{{0, 1, 0}, {0, 0}});
  EXPECT_EQ(w.omega, 0u);
  EXPECT_EQ(walk_weight(d, Walk{{1, 0}, {0}}).sum, -1);
  EXPECT_THROW(walk_weight(c4d(), Walk{{0, 2}, {0}}), std::invalid_argument);
  EXPECT_THROW(walk_weight(c4d(), Walk{{0, 1}, {}}), std::invalid_argument);
  EXPECT_EQ(walk_weight(c4d(), Walk{{3}, {}}).omega, 0u);
}

TEST(NullLabeling, Examples) {
  auto q = null_labeling(c4u(), Laplacian::Q);
  ASSERT_EQ(q.size(), 1u);
  ASSERT_TRUE(q[0].x);
  EXPECT_EQ(*q[0].x, (std::vector<GaussianInt>{1, -1, 1, -1}));
  EXPECT_TRUE(q[0].singular);

  const MixedGraph k3(3, {{0, 1, U}, {1, 2, U}, {2, 0, U}});
  q = null_labeling(k3, Laplacian::Q);
  EXPECT_FALSE(q[0].x);
  EXPECT_FALSE(q[0].singular);

  const auto l = null_labeling(k3, Laplacian::L);
  ASSERT_TRUE(l[0].x);
  EXPECT_EQ(*l[0].x, (std::vector<GaussianInt>{1, 1, 1}));

  q = null_labeling(c4d(), Laplacian::Q);
  ASSERT_TRUE(q[0].x);
  EXPECT_EQ(*q[0].x, (std::vector<GaussianInt>{1, I, -1, -I}));
}

TEST(NullLabeling, AgreesWithDeterminantOnExhaustiveSuite) {
  for (std::size_t n : {2u, 3u, 4u}) {
    for (const MixedGraph& g : testing::exhaustive_graphs(n)) {
      ASSERT_NO_THROW(null_labeling(g, Laplacian::Q));
      ASSERT_NO_THROW(null_labeling(g, Laplacian::L));
    }
  }
}

TEST(EquivalenceReport, Examples) {
  auto r = equivalence_report(c4u());
  EXPECT_TRUE(r.whole.quapartite);
  EXPECT_TRUE(r.whole.all_cycles_type_iii);
  EXPECT_TRUE(r.whole.det_q_zero);
  EXPECT_TRUE(r.whole.all_cycles_type_v);
  EXPECT_TRUE(r.whole.det_l_zero);
  EXPECT_TRUE(r.equivalences_hold());

  r = equivalence_report(directed_c3());
  EXPECT_FALSE(r.whole.quapartite);
  EXPECT_FALSE(r.whole.all_cycles_type_iii);
  EXPECT_FALSE(r.whole.det_q_zero);
  EXPECT_FALSE(r.whole.all_cycles_type_v);
  EXPECT_FALSE(r.whole.det_l_zero);
  EXPECT_TRUE(r.equivalences_hold());

  r = equivalence_report(mixed_triangle());
  EXPECT_TRUE(r.whole.quapartite);
  EXPECT_TRUE(r.whole.det_q_zero);
  EXPECT_FALSE(r.whole.all_cycles_type_v);
  EXPECT_FALSE(r.whole.det_l_zero);
  EXPECT_TRUE(r.equivalences_hold());
}

TEST(EquivalenceReport, DisconnectedGraphsAreJudgedPerComponent) {
  // an isolated vertex makes both matrices singular
  const MixedGraph g(4, {{0, 1, D}, {1, 2, D}, {2, 0, D}});
  const auto r = equivalence_report(g);
  EXPECT_FALSE(r.whole.quapartite);
  EXPECT_TRUE(r.whole.det_q_zero);
  ASSERT_EQ(r.components.size(), 2u);
  EXPECT_FALSE(r.components[0].flags.det_q_zero);
  EXPECT_TRUE(r.components[1].flags.det_q_zero);
  EXPECT_TRUE(r.equivalences_hold());
}

TEST(Quapartite, SameClassWalksHaveWeightDivisibleByFour) {
  std::mt19937_64 rng(51);
  std::size_t same_class_walks = 0;
  for (const MixedGraph& g : testing::exhaustive_graphs(4)) {
    const auto p = find_quapartition(g);
    if (!p || !connected(g)) continue;
    for (std::size_t start = 0; start < 4; ++start) {
      for (int rep = 0; rep < 100; ++rep) {
        Walk w{{start}, {}};
        WalkWeight acc;
        for (int step = 0; step < 12; ++step) {
          const auto& inc = g.incident(w.vertices.back());
          const std::size_t id = inc[rng() % inc.size()];
          w.edges.push_back(id);
          w.vertices.push_back(g.edge(id).other(w.vertices[w.vertices.size() - 1]));
          acc = walk_weight(g, w);
          const int diff = ((p->label[w.vertices.back()] - p->label[start]) % 4 + 4) % 4;
          ASSERT_EQ(((acc.sum % 4) + 4) % 4, diff);
          if (diff == 0) {
            ++same_class_walks;
            ASSERT_EQ(acc.omega % 4, 0u);
          }
        }
      }
    }
  }
  EXPECT_GT(same_class_walks, 10000u);
}

TEST(Quapartite, UnorientedGraphsAreQuapartiteExactlyWhenBipartite) {
  for (std::size_t n : {3u, 4u}) {
    for (const MixedGraph& g : testing::exhaustive_graphs(n)) {
      bool unoriented = true;
      for (const EdgeRecord& e : g.edges()) unoriented = unoriented && !e.oriented();
      if (unoriented) EXPECT_EQ(find_quapartition(g).has_value(), bipartite(g));
    }
  }
  std::mt19937_64 rng(52);
  for (int k = 0; k < 300; ++k) {
    std::vector<EdgeSpec> specs;
    const std::size_t n = 2 + rng() % 7;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (rng() % 3 == 0) specs.push_back({a, b, U});
    const MixedGraph g(n, specs);
    EXPECT_EQ(find_quapartition(g).has_value(), bipartite(g));
  }
}

TEST(Quapartite, OddCyclesMixBothEdgeKinds) {
  for (const MixedGraph& g : testing::exhaustive_graphs(4)) {
    if (!find_quapartition(g)) continue;
    for (const Cycle& c : simple_cycles(g)) {
      const CycleProfile p = cycle_profile(g, c);
      if (p.length() % 2 == 1) {
        EXPECT_GT(p.a + p.b, 0u);
        EXPECT_GT(p.c, 0u);
      }
      if (p.c == 0 || p.a + p.b == 0) EXPECT_EQ(p.length() % 2, 0u);
    }
  }
}

TEST(Quapartite, ReversingAnEdgeKeepsQuapartitenessIffItIsOnNoCycle) {
  std::size_t checked = 0;
  for (const MixedGraph& g : testing::exhaustive_graphs(4)) {
    if (!find_quapartition(g)) continue;
    const auto cycles = simple_cycles(g);
    for (const EdgeRecord& e : g.edges()) {
      if (!e.oriented()) continue;
      bool on_cycle = false;
      for (const Cycle& c : cycles) on_cycle = on_cycle || std::find(c.edges.begin(), c.edges.end(), e.id) != c.edges.end();
      const std::vector<std::size_t> ids{e.id};
      EXPECT_EQ(find_quapartition(revert_edges(g, ids)).has_value(), !on_cycle);
      ++checked;
    }
  }
  EXPECT_GT(checked, 0u);
}

TEST(Quapartite, ExistenceIgnoresVertexNumbering) {
  std::mt19937_64 rng(53);
  for (int k = 0; k < 500; ++k) {
    const MixedGraph g = testing::random_graph(rng, 2 + rng() % 7, 0.4);
    std::vector<std::size_t> perm(g.vertex_count());
    for (std::size_t v = 0; v < perm.size(); ++v) perm[v] = v;
    std::shuffle(perm.begin(), perm.end(), rng);
    const MixedGraph h = g.induced(perm);
    const auto pg = find_quapartition(g), ph = find_quapartition(h);
    ASSERT_EQ(pg.has_value(), ph.has_value());
    if (ph) EXPECT_TRUE(is_valid_quapartition(h, *ph));
  }
}

}  // namespace
}  // namespace mixedgraph
