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

#include "snark/coloring.hpp"
#include "snark/constructions.hpp"
#include "snark/factors.hpp"
#include "test_util.hpp"

namespace snark {
namespace {

// Perfect matchings as edge subsets of size n/2 covering every vertex.
std::vector<PerfectMatching> matchings_oracle(const MultiGraph& g) {
  std::vector<PerfectMatching> out;
  const int m = g.num_edges();
  for (std::uint32_t s = 0; s < (1u << m); ++s) {
    if (std::popcount(s) * 2 != g.num_vertices()) continue;
    PerfectMatching pm;
    for (EdgeId e = 0; e < m; ++e) {
      if (s >> e & 1) pm.push_back(e);
    }
    if (is_perfect_matching(g, pm)) out.push_back(pm);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int count_uncovered(const MultiGraph& g,
                    const std::vector<PerfectMatching>& list) {
  std::vector<char> covered(g.num_edges(), 0);
  for (const auto& pm : list) {
    for (EdgeId e : pm) covered[e] = 1;
  }
  return static_cast<int>(std::count(covered.begin(), covered.end(), 0));
}

TEST(FactorsTest, PetersenValues) {
  CubicGraph p = petersen();
  EXPECT_EQ(perfect_matchings(p).size(), 6u);
  EXPECT_EQ(oddness(p).value, 2);
  EXPECT_EQ(weak_oddness(p).value, 2);
  EXPECT_EQ(gamma2(p).value, 1);
  MuResult mu2 = mu_k(p, 2);
  EXPECT_EQ(mu2.value, 6);
  EXPECT_EQ(mu2.covered, Fraction(3, 5));
  MuResult mu3 = mu_k(p, 3);
  EXPECT_EQ(mu3.value, 3);
  EXPECT_EQ(mu3.covered, Fraction(4, 5));
  EXPECT_EQ(mu3_by_dp(p), 3);
  ExcessiveIndexResult xi = excessive_index(p, 8);
  ASSERT_TRUE(xi.value.has_value());
  EXPECT_EQ(*xi.value, 5);
  EXPECT_EQ(count_uncovered(p, xi.cover), 0);
  ExcessiveIndexResult capped = excessive_index(p, 4);
  EXPECT_FALSE(capped.value.has_value());
}

TEST(FactorsTest, ClassOneValues) {
  for (const CubicGraph& g : {k4(), k33()}) {
    EXPECT_EQ(oddness(g).value, 0);
    EXPECT_EQ(weak_oddness(g).value, 0);
    EXPECT_EQ(gamma2(g).value, 0);
    EXPECT_EQ(mu_k(g, 3).value, 0);
    EXPECT_EQ(*excessive_index(g, 8).value, 3);
  }
  EXPECT_EQ(perfect_matchings(k4()).size(), 3u);
  EXPECT_EQ(perfect_matchings(k33()).size(), 6u);
}

TEST(FactorsTest, WitnessesRealiseValues) {
  CubicGraph p = flower_snark(5);
  OddnessResult w = oddness(p);
  EvenFactor f = describe_factor(p, w.witness.edges);
  EXPECT_TRUE(f.is_two_factor);
  EXPECT_EQ(f.odd_count(), w.value);
  OddnessResult ww = weak_oddness(p);
  EXPECT_EQ(describe_factor(p, ww.witness.edges).odd_count(), ww.value);
  Gamma2Result g2 = gamma2(p);
  std::vector<EdgeId> common;
  std::set_intersection(g2.m1.begin(), g2.m1.end(), g2.m2.begin(), g2.m2.end(),
                        std::back_inserter(common));
  EXPECT_TRUE(is_perfect_matching(p, g2.m1));
  EXPECT_TRUE(is_perfect_matching(p, g2.m2));
  EXPECT_EQ(static_cast<int>(common.size()), g2.value);
  MuResult mu3 = mu_k(p, 3);
  ASSERT_EQ(mu3.matchings.size(), 3u);
  EXPECT_EQ(count_uncovered(p, mu3.matchings), mu3.value);
}

TEST(FactorsTest, DescribeFactorRejectsBadDegrees) {
  CubicGraph p = petersen();
  EXPECT_THROW(describe_factor(p, {0}), Error);
  EvenFactor empty = describe_factor(p, {});
  EXPECT_EQ(empty.odd_count(), 10);  // every isolated vertex is odd
}

TEST(FactorsTest, CoreOfPetersenTriple) {
  CubicGraph p = petersen();
  MuResult mu3 = mu_k(p, 3);
  CoreDecomposition core =
      core_of(p, {mu3.matchings[0], mu3.matchings[1], mu3.matchings[2]});
  int total = 0;
  for (const auto& cls : core.classes) total += static_cast<int>(cls.size());
  EXPECT_EQ(total, p.num_edges());
  EXPECT_EQ(static_cast<int>(core.classes[0].size()), 3);
  EXPECT_TRUE(core.is_proper());
  EXPECT_TRUE(core.is_cyclic);
  EXPECT_THROW(
      core_of(p, {PerfectMatching{0}, mu3.matchings[1], mu3.matchings[2]}),
      Error);
}

TEST(FactorsTest, NoPerfectMatching) {
  // A hub joined to three copies of K4 with one edge subdivided: deleting
  // the hub leaves three odd components, so there is no 1-factor.
  std::vector<Edge> edges;
  for (int b = 0; b < 3; ++b) {
    const int x = 1 + 5 * b, a = x + 1, c = x + 2, d = x + 3, e = x + 4;
    edges.insert(
        edges.end(),
        {{0, x}, {x, a}, {x, c}, {a, d}, {a, e}, {c, d}, {c, e}, {d, e}});
  }
  CubicGraph g = as_cubic(MultiGraph(16, edges));
  EXPECT_TRUE(perfect_matchings(g).empty());
  try {
    oddness(g);
    ADD_FAILURE() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNoTwoFactor);
  }
}

// Cross-oracle agreement on the complete corpus.
TEST(FactorsTest, PerfectMatchingsMatchSubsetOracle) {
  for (int n = 4; n <= 10; n += 2) {
    for (const MultiGraph& g : testing::cubic_corpus(n)) {
      EXPECT_EQ(perfect_matchings(g), matchings_oracle(g));
    }
  }
}

TEST(FactorsTest, OddnessRoutesAgreeOnCorpus) {
  for (int n = 4; n <= 12; n += 2) {
    for (const CubicGraph& g : testing::bridgeless_corpus(n)) {
      const int w = oddness(g).value;
      EXPECT_EQ(oddness_via_perfect_matchings(g).value, w);
      EXPECT_EQ(oddness_by_two_factor_enumeration(g), w);
      const int weak = weak_oddness(g).value;
      EXPECT_EQ(weak_oddness_by_enumeration(g), weak);
      EXPECT_LE(weak, w);
    }
  }
}

TEST(FactorsTest, MatchingMeasuresAgreeOnCorpus) {
  for (int n = 4; n <= 12; n += 2) {
    for (const CubicGraph& g : testing::bridgeless_corpus(n)) {
      auto list = perfect_matchings(g);
      const int g2 = gamma2(g).value;
      EXPECT_EQ(gamma2_by_pair_scan(list), g2);
      const int mu2 = mu_k(g, 2).value;
      EXPECT_EQ(3 * mu2, 3 * g2 + g.num_edges());
      const int mu3 = mu_k(g, 3).value;
      EXPECT_EQ(mu3_by_dp(g), mu3);
      EXPECT_GE(mu_k(g, 2).covered, Fraction(3, 5));
      EXPECT_GE(mu_k(g, 3).covered, Fraction(27, 35));
      if (chromatic_index(g) == 4) {
        const int w = oddness(g).value;
        EXPECT_LE(w, 2 * g2);
        EXPECT_LE(2 * g2, mu3 - 1);
        EXPECT_LE(3 * w, 2 * mu3);
        EXPECT_GE(mu3, 3);
      } else {
        EXPECT_EQ(mu3, 0);
      }
    }
  }
}

TEST(FactorsTest, RandomBridgelessMultigraphs) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    MultiGraph raw =
        testing::random_bridgeless_cubic(8 + 2 * (trial % 3), rng, false);
    CubicGraph g = as_cubic(raw);
    EXPECT_EQ(perfect_matchings(g), matchings_oracle(g));
    const int w = oddness(g).value;
    EXPECT_EQ(oddness_via_perfect_matchings(g).value, w);
    EXPECT_EQ(oddness_by_two_factor_enumeration(g), w);
    EXPECT_EQ(weak_oddness_by_enumeration(g), weak_oddness(g).value);
    EXPECT_EQ(gamma2_by_pair_scan(perfect_matchings(g)), gamma2(g).value);
    EXPECT_EQ(mu3_by_dp(g), mu_k(g, 3).value);
  }
}

TEST(FactorsTest, ExcessiveIndexCoverIsValid) {
  for (const CubicGraph& g : testing::bridgeless_corpus(10)) {
    ExcessiveIndexResult r = excessive_index(g, 8);
    ASSERT_TRUE(r.value.has_value());
    EXPECT_EQ(static_cast<int>(r.cover.size()), *r.value);
    EXPECT_EQ(count_uncovered(g, r.cover), 0);
    for (const auto& pm : r.cover) EXPECT_TRUE(is_perfect_matching(g, pm));
    // A cover with fewer matchings would leave an edge uncovered.
    EXPECT_GT(mu_k(g, *r.value - 1).value, 0);
  }
}

}  // namespace
}  // namespace snark
