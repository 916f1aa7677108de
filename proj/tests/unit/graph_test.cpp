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

#include <random>

#include <gtest/gtest.h>

#include "snark/constructions.hpp"
#include "snark/graph.hpp"
#include "snark/graph6.hpp"
#include "test_util.hpp"

namespace snark {
namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no exception";
  return ErrorKind::kInvalidArgument;
}

TEST(MultiGraphTest, IncidenceFollowsEdgeIds) {
  MultiGraph g(3, {{0, 1}, {1, 2}, {0, 1}});
  EXPECT_EQ(g.num_edges(), 3);
  ASSERT_EQ(g.degree(1), 3);
  std::vector<EdgeId> inc(g.incident(1).begin(), g.incident(1).end());
  EXPECT_EQ(inc, (std::vector<EdgeId>{0, 1, 2}));
  EXPECT_FALSE(g.is_simple());
  EXPECT_EQ(g.other(1, 2), 1);
}

TEST(MultiGraphTest, RejectsLoopsAndBadVertices) {
  EXPECT_EQ(kind_of([] { MultiGraph(2, {{1, 1}}); }),
            ErrorKind::kLoopEncountered);
  EXPECT_EQ(kind_of([] { MultiGraph(2, {{0, 2}}); }),
            ErrorKind::kInvalidVertex);
}

TEST(MultiGraphTest, WithoutEdgesKeepsRelativeOrder) {
  MultiGraph g(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  std::vector<EdgeId> kept;
  const std::vector<EdgeId> removed{1};
  MultiGraph h = g.without_edges(removed, &kept);
  EXPECT_EQ(kept, (std::vector<EdgeId>{0, 2, 3}));
  EXPECT_EQ(h.edge(1), (Edge{2, 3}));
}

TEST(MultiGraphTest, WithoutVerticesRenumbers) {
  MultiGraph g(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  std::vector<VertexId> kv;
  std::vector<EdgeId> ke;
  const std::vector<VertexId> removed{1};
  MultiGraph h = g.without_vertices(removed, &kv, &ke);
  EXPECT_EQ(h.num_vertices(), 3);
  EXPECT_EQ(kv, (std::vector<VertexId>{0, 2, 3}));
  EXPECT_EQ(ke, (std::vector<EdgeId>{2, 3}));
  EXPECT_EQ(h.edge(0), (Edge{1, 2}));
}

TEST(MultiGraphTest, AsCubicNamesOffendingVertex) {
  MultiGraph path(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(kind_of([&] { as_cubic(path); }), ErrorKind::kNotCubic);
  EXPECT_NO_THROW(as_cubic(petersen().graph()));
}

TEST(EdgeListTest, RoundTripWithParallelEdges) {
  MultiGraph g(2, {{0, 1}, {0, 1}, {0, 1}});
  EXPECT_EQ(parse_edge_list(write_edge_list(g)), g);
}

TEST(EdgeListTest, IgnoresCommentsAndRejectsGarbage) {
  EXPECT_EQ(parse_edge_list("# theta\n2 3\n0 1\n\n0 1\n0 1\n").num_edges(), 3);
  EXPECT_EQ(kind_of([] { parse_edge_list("2 2\n0 1\n"); }),
            ErrorKind::kMalformedEdgeList);
  EXPECT_EQ(kind_of([] { parse_edge_list("2 1\n0 x\n"); }),
            ErrorKind::kMalformedEdgeList);
}

TEST(Graph6Test, KnownEncodings) {
  // K4 is "C~" and the Petersen graph in canonical nauty labelling "IheA@GUAo".
  MultiGraph k = parse_graph6("C~");
  EXPECT_EQ(k.num_vertices(), 4);
  EXPECT_EQ(k.num_edges(), 6);
  EXPECT_EQ(write_graph6(k4().graph()), "C~");
  MultiGraph p = parse_graph6("IheA@GUAo");
  EXPECT_EQ(p.num_edges(), 15);
  EXPECT_EQ(girth(p), 5);
  EXPECT_EQ(parse_graph6(">>graph6<<C~\n").num_edges(), 6);
}

TEST(Graph6Test, Errors) {
  EXPECT_EQ(kind_of([] { parse_graph6("C"); }), ErrorKind::kMalformedGraph6);
  EXPECT_EQ(kind_of([] { parse_graph6("C\x7f"); }),
            ErrorKind::kMalformedGraph6);
  MultiGraph theta(2, {{0, 1}, {0, 1}, {0, 1}});
  EXPECT_EQ(kind_of([&] { write_graph6(theta); }), ErrorKind::kNotSimple);
}

TEST(Graph6Test, RoundTripPreservesEdgeSetOnRandomGraphs) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 4 + 2 * static_cast<int>(rng() % 30);
    MultiGraph g = testing::random_cubic(n, rng, true);
    MultiGraph h = parse_graph6(write_graph6(g));
    EXPECT_EQ(normalized_edge_set(h), normalized_edge_set(g));
    // Re-encoding the decoded graph is stable.
    EXPECT_EQ(write_graph6(h), write_graph6(g));
  }
}

TEST(Graph6Test, LargeOrderHeader) {
  // n >= 63 uses the four-byte size prefix.
  std::vector<Edge> cycle;
  for (int i = 0; i < 100; ++i) cycle.push_back({i, (i + 1) % 100});
  MultiGraph g(100, cycle);
  std::string s = write_graph6(g);
  EXPECT_EQ(s[0], '~');
  EXPECT_EQ(normalized_edge_set(parse_graph6(s)), normalized_edge_set(g));
}

TEST(Graph6Test, CorpusCounts) {
  // Connected cubic graphs: 1, 2, 5, 19, 85, 509, 4060 on 4..16 vertices.
  const std::vector<std::pair<int, int>> counts{
      {4, 1}, {6, 2}, {8, 5}, {10, 19}, {12, 85}, {14, 509}, {16, 4060}};
  for (auto [n, count] : counts) {
    auto corpus = testing::cubic_corpus(n);
    EXPECT_EQ(static_cast<int>(corpus.size()), count) << n;
    for (const MultiGraph& g : corpus) {
      ASSERT_NO_THROW(as_cubic(g));
      ASSERT_TRUE(g.is_connected());
    }
  }
}

}  // namespace
}  // namespace snark
