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

#include "gtest/gtest.h"

namespace mixedgraph {
namespace {

MixedGraph from_states(std::vector<int> s) { return cycle_graph(s); }

TEST(CycleProfile, Examples) {
  EXPECT_EQ(cycle_profile(from_states({1, 1, 1}), cycle_of_cycle_graph(3)), (CycleProfile{3, 0, 0}));
  EXPECT_EQ(cycle_profile(from_states({0, 0, 0, 0}), cycle_of_cycle_graph(4)), (CycleProfile{0, 0, 4}));
  EXPECT_EQ(cycle_profile(from_states({1, 1, 0}), cycle_of_cycle_graph(3)), (CycleProfile{2, 0, 1}));
}

TEST(CycleProfile, RejectsNonCycles) {
  const MixedGraph g = from_states({1, 1, 1});
  EXPECT_THROW(cycle_profile(g, Cycle{{0, 1}, {0, 1}}), std::invalid_argument);
  EXPECT_THROW(cycle_profile(g, Cycle{{0, 1, 1}, {0, 1, 2}}), std::invalid_argument);
  EXPECT_THROW(cycle_profile(g, Cycle{{0, 1, 2}, {0, 2, 1}}), std::invalid_argument);
}

TEST(ClassifyCycle, Examples) {
  EXPECT_EQ(classify_cycle({3, 0, 0}), (CycleTypes{CycleTypeS::I, CycleTypeT::I}));
  EXPECT_EQ(classify_cycle({0, 0, 3}), (CycleTypes{CycleTypeS::II, CycleTypeT::V}));
  EXPECT_EQ(classify_cycle({2, 0, 1}), (CycleTypes{CycleTypeS::III, CycleTypeT::IV}));
  EXPECT_EQ(to_string(CycleTypeS::III), "III");
  EXPECT_EQ(to_string(CycleTypeT::IV), "IV");
}

TEST(CycleDet, Examples) {
  EXPECT_EQ(cycle_det_normsq(from_states({1, 1, 1}), cycle_of_cycle_graph(3), Incidence::S), 2u);
  EXPECT_EQ(cycle_det_normsq(from_states({0, 0, 0}), cycle_of_cycle_graph(3), Incidence::S), 4u);
  EXPECT_EQ(cycle_det_normsq(from_states({1, 1, 0}), cycle_of_cycle_graph(3), Incidence::S), 0u);
  EXPECT_EQ(cycle_det_normsq(from_states({1, 1, 0}), cycle_of_cycle_graph(3), Incidence::T), 4u);
}

TEST(CycleTypes, DirectionAndRotationInvariance) {
  for (std::size_t k = 3; k <= 6; ++k) {
    std::vector<int> s(k, 0);
    for (;;) {
      const MixedGraph g = cycle_graph(s);
      const Cycle c = cycle_of_cycle_graph(k);
      const CycleProfile p = cycle_profile(g, c);
      Cycle rev{{c.vertices.rbegin(), c.vertices.rend()}, {}};
      for (std::size_t j = 0; j < k; ++j) rev.edges.push_back(c.edges[(2 * k - 2 - j) % k]);
      const CycleProfile q = cycle_profile(g, rev);
      EXPECT_EQ(q.a, p.b);
      EXPECT_EQ(q.b, p.a);
      EXPECT_EQ(classify_cycle(p), classify_cycle(q));
      Cycle rot = c;
      std::rotate(rot.vertices.begin(), rot.vertices.begin() + 1, rot.vertices.end());
      std::rotate(rot.edges.begin(), rot.edges.begin() + 1, rot.edges.end());
      EXPECT_EQ(cycle_profile(g, rot), p);
      std::size_t j = 0;
      while (j < k && s[j] == 2) s[j++] = 0;
      if (j == k) break;
      ++s[j];
    }
  }
}

TEST(RevertEdges, Examples) {
  const MixedGraph g = from_states({1, 1, 1});
  const std::vector<std::size_t> first{0};
  const MixedGraph r = revert_edges(g, first);
  EXPECT_EQ(r.edge(0).u, 1u);
  EXPECT_EQ(r.edge(0).v, 0u);
  EXPECT_EQ(r.edge(1).u, 1u);
  const MixedGraph back = revert_edges(r, first);
  for (std::size_t id = 0; id < 3; ++id) {
    EXPECT_EQ(back.edge(id).u, g.edge(id).u);
    EXPECT_EQ(back.edge(id).v, g.edge(id).v);
  }
  const std::vector<std::size_t> unoriented{2};
  EXPECT_THROW(revert_edges(from_states({1, 1, 0}), unoriented), std::invalid_argument);
  // type III (2,0,1) with one reverted edge becomes type II
  const MixedGraph t3 = from_states({1, 1, 0});
  EXPECT_EQ(classify_cycle(cycle_profile(revert_edges(t3, first), cycle_of_cycle_graph(3))).s, CycleTypeS::II);
}

TEST(SimpleCycles, CountsAndCanonicalForm) {
  std::vector<EdgeSpec> k4;
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = a + 1; b < 4; ++b) k4.push_back({a, b, EdgeKind::Unoriented});
  const auto cycles = simple_cycles(MixedGraph(4, k4));
  EXPECT_EQ(cycles.size(), 7u);
  for (const Cycle& c : cycles) {
    EXPECT_EQ(c, canonical_cycle(c));
    EXPECT_EQ(c.vertices.front(), *std::min_element(c.vertices.begin(), c.vertices.end()));
  }
  EXPECT_TRUE(simple_cycles(MixedGraph(3, {{0, 1, EdgeKind::Oriented}, {1, 2, EdgeKind::Oriented}})).empty());
}

}  // namespace
}  // namespace mixedgraph
