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
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "snark/coloring.hpp"
#include "snark/constructions.hpp"
#include "snark/cycle_factor.hpp"
#include "snark/factors.hpp"
#include "snark/graph6.hpp"
#include "snark/structure.hpp"
#include "test_util.hpp"

namespace snark {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  EXPECT_TRUE(in.good()) << path;
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

// Removing both edges disconnects g.
bool is_two_edge_cut(const MultiGraph& g, EdgeId a, EdgeId b) {
  std::vector<Edge> kept;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (e != a && e != b) kept.push_back(g.edge(e));
  }
  return !MultiGraph(g.num_vertices(), kept).is_connected();
}

class GoldenTest : public ::testing::TestWithParam<const char*> {};

TEST_P(GoldenTest, MatchesFixtures) {
  const std::string name = GetParam();
  std::string file = name;
  for (char& c : file) {
    if (c == ':') c = '_';
  }
  const std::string base = testing::fixture_path("golden/" + file);
  CubicGraph g = build_named(name);
  EXPECT_EQ(write_graph6(g) + "\n", read_file(base + ".g6"));
  EXPECT_EQ(write_edge_list(g), read_file(base + ".edgelist"));
  EXPECT_EQ(normalized_edge_set(parse_edge_list(read_file(base + ".edgelist"))),
            normalized_edge_set(g));
}

INSTANTIATE_TEST_SUITE_P(Builders, GoldenTest,
                         ::testing::Values("petersen", "k4", "k33", "flower:5",
                                           "flower:7", "loupekhine:5",
                                           "loupekhine:7", "K", "K_star", "H28",
                                           "G56"));

TEST(ConstructionsTest, Petersen) {
  CubicGraph p = petersen();
  EXPECT_EQ(p.num_vertices(), 10);
  EXPECT_TRUE(p.graph().is_simple());
  EXPECT_EQ(girth(p), 5);
  EXPECT_EQ(chromatic_index(p), 4);
  // Vertex 0 is {1,2}; its neighbours are {3,4}, {3,5}, {4,5}.
  std::vector<VertexId> nb;
  for (EdgeId e : p.incident(0)) nb.push_back(p.other(e, 0));
  std::sort(nb.begin(), nb.end());
  EXPECT_EQ(nb, (std::vector<VertexId>{7, 8, 9}));
  PetersenMinusVertex pm = petersen_minus_vertex();
  EXPECT_EQ(pm.graph.num_vertices(), 9);
  EXPECT_EQ(std::vector<VertexId>({pm.x, pm.y, pm.z}),
            (std::vector<VertexId>{6, 7, 8}));
}

TEST(ConstructionsTest, FlowerSnarks) {
  // J_3 is Tietze's graph: class 2, but with a triangle.
  EXPECT_EQ(chromatic_index(flower_snark(3)), 4);
  EXPECT_EQ(girth(flower_snark(3)), 3);
  for (int k : {5, 7, 9}) {
    CubicGraph j = flower_snark(k);
    EXPECT_EQ(j.num_vertices(), 4 * k);
    EXPECT_EQ(chromatic_index(j), 4) << k;
    EXPECT_EQ(girth(j), k == 5 ? 5 : 6);
  }
  EXPECT_THROW(flower_snark(4), Error);
  try {
    flower_snark(6);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kEvenK);
  }
}

TEST(ConstructionsTest, CanonicalMatching) {
  auto m = canonical_petersen_matching();
  EXPECT_EQ(m, (std::array<EdgeId, 3>{0, 3, 6}));
  CubicGraph p = petersen();
  std::vector<char> seen(10, 0);
  for (EdgeId e : m) {
    EXPECT_FALSE(seen[p.edge(e).u] || seen[p.edge(e).v]);
    seen[p.edge(e).u] = seen[p.edge(e).v] = 1;
  }
  // Maximal: every other edge touches a matched vertex.
  for (const Edge& e : p.graph().edges()) EXPECT_TRUE(seen[e.u] || seen[e.v]);
  // Every 2-factor (two 5-circuits) meets the matching in exactly two edges,
  // one per circuit.
  for (const PerfectMatching& pm : perfect_matchings(p)) {
    EvenFactor f = describe_factor(p, complement_edges(p, pm));
    int hits = 0;
    for (EdgeId e : m) {
      hits += std::find(f.edges.begin(), f.edges.end(), e) != f.edges.end();
    }
    EXPECT_EQ(hits, 2);
  }
}

TEST(ConstructionsTest, GlueBuildsTwoEdgeCut) {
  CubicGraph p = petersen();
  GlueResult r = glue_petersen(p, 4);
  EXPECT_EQ(r.graph.num_vertices(), 20);
  EXPECT_EQ(r.h_offset, 10);
  EXPECT_EQ(r.g_edges[4], -1);
  EXPECT_EQ(r.h_edges[0], -1);
  EXPECT_TRUE(is_two_edge_cut(r.graph, r.clone_xu, r.clone_yv));
  EXPECT_EQ(r.graph.edge(r.clone_xu).u, p.edge(4).u);
  EXPECT_EQ(r.graph.edge(r.clone_yv).u, p.edge(4).v);
  EXPECT_EQ(chromatic_index(r.graph), 4);
  // Surviving edges keep their endpoints.
  for (EdgeId e = 0; e < p.num_edges(); ++e) {
    if (r.g_edges[e] >= 0) EXPECT_EQ(r.graph.edge(r.g_edges[e]), p.edge(e));
  }
}

TEST(ConstructionsTest, KAndKStarStructure) {
  KGraph k = build_K();
  EXPECT_EQ(k.graph.num_vertices(), 50);
  EXPECT_EQ(k.clone_pairs.size(), 4u);
  EXPECT_TRUE(bridges(k.graph).empty());
  for (const auto& pair : k.clone_pairs) {
    EXPECT_TRUE(is_two_edge_cut(k.graph, pair[0], pair[1]));
  }
  // Parity across a 2-edge-cut: a 2-factor uses both clone edges or neither.
  OddnessResult w = oddness(k.graph);
  for (const auto& pair : k.clone_pairs) {
    const auto& f = w.witness.edges;
    EXPECT_EQ(std::count(f.begin(), f.end(), pair[0]),
              std::count(f.begin(), f.end(), pair[1]));
  }
  EXPECT_EQ(w.value, 6);
  EXPECT_EQ(weak_oddness(k.graph).value, 6);

  KGraph s = build_K_star();
  EXPECT_EQ(s.graph.num_vertices(), 60);
  EXPECT_EQ(s.clone_pairs.size(), 5u);
  for (const auto& pair : s.clone_pairs) {
    EXPECT_TRUE(is_two_edge_cut(s.graph, pair[0], pair[1]));
  }
  EXPECT_EQ(oddness(s.graph).value, 8);
  EXPECT_EQ(weak_oddness(s.graph).value, 6);
}

TEST(ConstructionsTest, GlueingHypothesesForKAndE1) {
  KGraph k = build_K();
  CycleFactorOptions two;
  two.mode = FactorMode::kTwoFactor;
  two.forced_in = {k.e1};
  CycleFactorResult through = min_odd_factor(k.graph, two);
  ASSERT_TRUE(through.feasible);
  EXPECT_GT(through.odd_components, 6);
  CycleFactorOptions even;
  even.mode = FactorMode::kEvenFactor;
  even.odd_edge = k.e1;
  CycleFactorResult odd = min_odd_factor(k.graph, even);
  ASSERT_TRUE(odd.feasible);
  EXPECT_EQ(odd.odd_components, 6);
}

TEST(ConstructionsTest, ResistanceConstructions) {
  HGraph h = build_H28();
  EXPECT_EQ(h.graph.num_vertices(), 28);
  for (const auto& block : h.blocks) EXPECT_EQ(block.size(), 9u);
  EXPECT_EQ(h.graph.graph().degree(h.hub), 3);
  // 3-edge-connected: bridgeless with no 2-edge-cut.
  EXPECT_TRUE(bridges(h.graph).empty());
  EXPECT_TRUE(two_edge_cuts(h.graph).empty());
  EXPECT_EQ(resistance(h.graph).r, 3);
  EXPECT_EQ(oddness(h.graph).value, 4);
  EXPECT_EQ(weak_oddness(h.graph).value, 4);

  GGraph g = build_G56();
  EXPECT_EQ(g.graph.num_vertices(), 56);
  for (const Edge& e : g.removed) EXPECT_NE(e.u, e.v);
  EXPECT_EQ(resistance(g.graph).r, 4);
  EXPECT_EQ(oddness(g.graph).value, 6);
  EXPECT_EQ(weak_oddness(g.graph).value, 6);
}

TEST(ConstructionsTest, BuildersAreDeterministic) {
  for (const char* name : {"K", "K_star", "H28", "G56", "loupekhine:9"}) {
    EXPECT_EQ(write_graph6(build_named(name)), write_graph6(build_named(name)))
        << name;
  }
}

TEST(ConstructionsTest, BuilderErrors) {
  EXPECT_THROW(build_named("dodecahedron"), Error);
  EXPECT_THROW(build_named("flower:"), Error);
  EXPECT_THROW(build_named("flower:x"), Error);
  try {
    build_named("loupekhine:8");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kEvenK);
  }
}

}  // namespace
}  // namespace snark
