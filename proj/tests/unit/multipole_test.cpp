// Copyright 2026 The snarkmeasures Authors.
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

#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "snark/coloring.hpp"
#include "snark/constructions.hpp"
#include "snark/multipole.hpp"
#include "snark/structure.hpp"
#include "test_util.hpp"

namespace snark {
namespace {

Multipole vertex_3pole() { return Multipole(1, {}, {{0}, {0}, {0}}); }
Multipole edge_2pole() { return Multipole(0, {}, {{-1, 1}, {-1, 0}}); }

// Colour-complete 4-pole: a cubic graph on 8 vertices minus two edges.
constexpr const char* kComplete4Pole =
    "8 10 4\n0 4\n1 4\n0 5\n2 5\n1 6\n2 6\n3 6\n2 7\n3 7\n4 7\n"
    "v 0\nv 3\nv 1\nv 5\n";

TEST(MultipoleTest, SmallPolesAreColorComplete) {
  ColSet v = tait_colorings(vertex_3pole());
  EXPECT_EQ(v.size(), 6u);
  EXPECT_TRUE(is_color_complete(vertex_3pole()));
  ColSet e = tait_colorings(edge_2pole());
  EXPECT_EQ(e.size(), 3u);
  EXPECT_TRUE(e.contains({1, 1}));
  EXPECT_FALSE(e.contains({1, 2}));
  EXPECT_TRUE(is_color_complete(edge_2pole()));
}

TEST(MultipoleTest, OnePoleHasNoColoring) {
  // K4 with one edge subdivided by a vertex carrying the single semiedge.
  Multipole m(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 4}, {4, 3}, {2, 3}},
              {{4}});
  EXPECT_TRUE(tait_colorings(m).empty());
}

TEST(MultipoleTest, ParityFeasibleFourPolePatterns) {
  ColSet s = parity_feasible_tuples(4);
  // (a,a,a,a): 3; (a,a,b,b), (a,b,a,b), (a,b,b,a): 3 * 6 each.
  EXPECT_EQ(s.size(), 21u);
  for (const ColTuple& t : s.tuples) {
    const bool ok = (t[0] == t[1] && t[2] == t[3]) ||
                    (t[0] == t[2] && t[1] == t[3]) ||
                    (t[0] == t[3] && t[1] == t[2]);
    EXPECT_TRUE(ok);
  }
  Multipole complete = parse_multipole(kComplete4Pole);
  EXPECT_TRUE(is_color_complete(complete));
  EXPECT_EQ(tait_colorings(complete), s);
  // Splitting one semiedge with a vertex gives a 5-pole realising X1 and X2
  // both nonzero, so it is not a NOT gate.
  NotGateCheck c = check_not_gate(join(complete, vertex_3pole(), {{3, 0}}));
  EXPECT_FALSE(c.ok);
  EXPECT_EQ(c.counterexample.size(), 5u);
}

TEST(MultipoleTest, ParityCheck) {
  EXPECT_FALSE(parity_check(2, 1, 1, 4));
  EXPECT_TRUE(parity_check(3, 1, 1, 5));
  EXPECT_TRUE(parity_check(2, 2, 0, 4));
}

TEST(MultipoleTest, ParityLemmaFuzz) {
  std::mt19937 rng(29);
  std::uint64_t checked = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    Multipole m = testing::random_multipole(rng, 6);
    ColSet s = tait_colorings(m);
    for (const ColTuple& t : s.tuples) {
      int count[4] = {0, 0, 0, 0};
      for (auto c : t) ++count[c];
      ASSERT_TRUE(parity_check(count[1], count[2], count[3], m.arity()));
      ++checked;
    }
    // Col(M) is closed under the six colour permutations.
    for (const ColTuple& t : s.tuples) {
      ColTuple swapped = t;
      for (auto& c : swapped) c = c == 1 ? 2 : c == 2 ? 1 : c;
      ASSERT_TRUE(s.contains(swapped));
    }
    EXPECT_TRUE(is_subset(s, parity_feasible_tuples(m.arity())));
  }
  EXPECT_GE(checked, 10000u);
}

TEST(MultipoleTest, ParseWriteRoundTrip) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    Multipole m = testing::random_multipole(rng, 8);
    EXPECT_EQ(parse_multipole(write_multipole(m)), m);
  }
  EXPECT_EQ(parse_multipole(write_multipole(edge_2pole())), edge_2pole());
  EXPECT_THROW(parse_multipole("1 0 2\nv 0\nv 0\n"), Error);
}

TEST(MultipoleTest, JoinTwoVerticesGivesTheta) {
  MultiGraph g =
      join_to_graph(vertex_3pole(), vertex_3pole(), identity_pairing(3));
  EXPECT_EQ(g.num_vertices(), 2);
  EXPECT_EQ(g.num_edges(), 3);
  EXPECT_THROW(join(vertex_3pole(), vertex_3pole(), {{0, 0}, {0, 1}}), Error);
  EXPECT_THROW(join(edge_2pole(), edge_2pole(), identity_pairing(2)), Error);
  EXPECT_THROW(are_color_disjoint(vertex_3pole(), edge_2pole()), Error);
}

TEST(MultipoleTest, SplitJoinRoundTripOnPetersenCuts) {
  CubicGraph p = petersen();
  auto cuts = testing::cyclic_cuts(p, 5);
  ASSERT_FALSE(cuts.empty());
  for (const auto& cut : cuts) {
    EXPECT_EQ(cut.size(), 5u);  // cyclically 5-edge-connected
    SplitResult s = split(p, cut);
    MultiGraph back = join_to_graph(
        s.first, s.second, identity_pairing(static_cast<int>(cut.size())));
    EXPECT_EQ(back.num_edges(), p.num_edges());
    // Relabel back to the original ids to compare edge sets.
    std::vector<VertexId> old = s.first_vertices;
    old.insert(old.end(), s.second_vertices.begin(), s.second_vertices.end());
    std::vector<Edge> relabelled;
    for (const Edge& e : back.edges())
      relabelled.push_back({old[e.u], old[e.v]});
    EXPECT_EQ(normalized_edge_set(MultiGraph(10, relabelled)),
              normalized_edge_set(p));
    // Class 2: the two halves share no boundary colouring.
    EXPECT_TRUE(are_color_disjoint(s.first, s.second));
  }
  EXPECT_THROW(split(p, {0}), Error);
}

TEST(MultipoleTest, ComplementaryHalvesOfFlowerSnark) {
  CubicGraph j5 = flower_snark(5);
  std::vector<EdgeId> cut;
  ASSERT_EQ(cyclic_edge_connectivity(j5, &cut), 5);
  SplitResult s = split(j5, cut);
  EXPECT_TRUE(are_color_disjoint(s.first, s.second));
  // A class-1 graph has halves sharing a colouring.
  CubicGraph prism = as_cubic(MultiGraph(6, {{0, 1},
                                             {1, 2},
                                             {2, 0},
                                             {3, 4},
                                             {4, 5},
                                             {5, 3},
                                             {0, 3},
                                             {1, 4},
                                             {2, 5}}));
  SplitResult t = split(prism, {6, 7, 8});
  EXPECT_FALSE(are_color_disjoint(t.first, t.second));
}

TEST(MultipoleTest, NotGate) {
  Multipole gate = not_gate();
  EXPECT_EQ(gate.arity(), 5);
  EXPECT_EQ(gate.num_vertices(), 7);
  NotGateCheck c = check_not_gate(gate);
  EXPECT_TRUE(c.ok);
  // Klein restatement on every boundary colouring.
  for (const ColTuple& t : tait_colorings(gate).tuples) {
    BooleColor x1 = klein_add(boole_of_color(t[0]), boole_of_color(t[1]));
    BooleColor x2 = klein_add(boole_of_color(t[2]), boole_of_color(t[3]));
    EXPECT_NE(klein_add(x1, x2), BooleColor::kZero);
  }
  std::vector<Grouping> groupings = not_gate_groupings(not_gate_fragment());
  ASSERT_EQ(groupings.size(), 1u);
  EXPECT_EQ(groupings[0].x1, (std::array<int, 2>{0, 1}));
  EXPECT_EQ(groupings[0].x2, (std::array<int, 2>{3, 4}));
  EXPECT_EQ(groupings[0].e, 2);
}

TEST(MultipoleTest, LoupekhineSnarks) {
  for (int k : {5, 7}) {
    CubicGraph g = loupekhine(k);
    EXPECT_EQ(chromatic_index(g), 4) << k;
    EXPECT_TRUE(bridges(g).empty());
    EXPECT_GE(girth(g), 5);
  }
  EXPECT_THROW(loupekhine(6), Error);
}

TEST(MultipoleTest, Reductions) {
  // Nothing smaller than one vertex realises a 3-pole colouring.
  EXPECT_FALSE(find_reduction(vertex_3pole(), 3).has_value());
  EXPECT_FALSE(find_reduction(edge_2pole(), 3).has_value());
  // A triangle 3-pole reduces to a single vertex.
  Multipole triangle(3, {{0, 1}, {1, 2}, {2, 0}}, {{0}, {1}, {2}});
  auto r = find_reduction(triangle, 3);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->num_vertices(), 1);
  EXPECT_TRUE(is_subset(tait_colorings(*r), tait_colorings(triangle)));
}

TEST(MultipoleTest, FlowerSnarkFourPolesReduce) {
  // Remove two adjacent vertices of J5: the remaining 4-pole has 18 > v(4)
  // vertices and reduces to a multipole with at most two.
  CubicGraph j5 = flower_snark(5);
  const Edge e = j5.edge(0);
  std::uint32_t side = 0;
  for (VertexId v = 0; v < j5.num_vertices(); ++v) {
    if (v != e.u && v != e.v) side |= 1u << v;
  }
  std::vector<EdgeId> cut = testing::boundary(j5, side);
  ASSERT_EQ(cut.size(), 4u);
  SplitResult s = split(j5, cut);
  const Multipole& big =
      s.first.num_vertices() > s.second.num_vertices() ? s.first : s.second;
  ASSERT_EQ(big.num_vertices(), 18);
  auto r = find_reduction(big, 2);
  ASSERT_TRUE(r.has_value());
  EXPECT_LE(r->num_vertices(), 2);
  EXPECT_TRUE(is_subset(tait_colorings(*r), tait_colorings(big)));
}

}  // namespace
}  // namespace snark
