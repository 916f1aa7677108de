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
#include "snark/flows.hpp"
#include "snark/structure.hpp"
#include "test_util.hpp"

namespace snark {
namespace {

// Nowhere-zero Z_k flow by trying all (k-1)^m value vectors.
bool group_flow_oracle(const MultiGraph& g, int k) {
  const int m = g.num_edges();
  std::vector<int> value(m, 1);
  for (;;) {
    std::vector<int> net(g.num_vertices(), 0);
    for (EdgeId e = 0; e < m; ++e) {
      net[flow_tail(g, e)] += value[e];
      net[flow_head(g, e)] -= value[e];
    }
    if (std::all_of(net.begin(), net.end(),
                    [k](int x) { return x % k == 0; })) {
      return true;
    }
    int i = 0;
    while (i < m && value[i] == k - 1) value[i++] = 1;
    if (i == m) return false;
    ++value[i];
  }
}

TEST(FlowsTest, VerifyFlowCatchesViolations) {
  CubicGraph g = k4();
  auto flow = nowhere_zero_group_flow(g, 4);
  ASSERT_TRUE(flow.has_value());
  EXPECT_TRUE(verify_flow(g, *flow, FlowSpec::group(4)).ok);
  IntegerFlow bad = *flow;
  bad.value[0] = (bad.value[0] + 1) % 4;
  FlowCheck c = verify_flow(g, bad, FlowSpec::group(4));
  EXPECT_FALSE(c.ok);
  IntegerFlow zero{std::vector<int>(6, 0)};
  c = verify_flow(g, zero, FlowSpec::group(4));
  EXPECT_FALSE(c.ok);
  EXPECT_GE(c.edge, 0);
}

TEST(FlowsTest, PetersenFlows) {
  CubicGraph p = petersen();
  EXPECT_FALSE(has_nowhere_zero_flow(p, 4));
  EXPECT_TRUE(has_nowhere_zero_flow(p, 5));
  EXPECT_EQ(flow_number(p), 5);
  auto five = nowhere_zero_group_flow(p, 5);
  ASSERT_TRUE(five.has_value());
  EXPECT_TRUE(verify_flow(p, *five, FlowSpec::group(5)).ok);
  CircularFlowResult fc = circular_flow_number(p);
  EXPECT_EQ(fc.value, Fraction(5, 1));
  EXPECT_TRUE(fc.exact);
  ASSERT_TRUE(fc.witness.has_value());
  EXPECT_TRUE(verify_flow(p, *fc.witness, FlowSpec::circular(5, 1)).ok);
  EXPECT_EQ(circular_flow_number_by_orientations(p), Fraction(5, 1));
  EXPECT_FALSE(circular_flow(p, 49, 10).has_value());
  FlowResistanceResult rf = flow_resistance(p);
  EXPECT_EQ(rf.value, 1);
  EXPECT_TRUE(verify_klein_flow(p, rf.witness, false).ok);
  EXPECT_EQ(rf.witness.zero_count(), 1);
  EXPECT_EQ(flow_resistance_by_cycle_space(p), 1);
  EXPECT_EQ(flow_resistance_by_cotree(p), 1);
  EXPECT_EQ(phi_plus(p, 3).value, 2);
  EXPECT_EQ(phi_plus(p, 4).value, 1);
  EXPECT_EQ(phi_plus(p, 5).value, 0);
  FlowCriticality crit = is_4_flow_critical(p);
  EXPECT_TRUE(crit.critical);
  EXPECT_TRUE(crit.by_deletion);
  EXPECT_TRUE(crit.by_characterization);
}

TEST(FlowsTest, SmallGraphs) {
  EXPECT_EQ(circular_flow_number(k33()).value, Fraction(3, 1));
  EXPECT_EQ(circular_flow_number_by_orientations(k33()), Fraction(3, 1));
  EXPECT_EQ(flow_number(k33()), 3);
  EXPECT_EQ(flow_number(k4()), 4);
  EXPECT_EQ(circular_flow_number(k4()).value, Fraction(4, 1));
  EXPECT_EQ(circular_flow_number_by_orientations(k4()), Fraction(4, 1));
  EXPECT_THROW(is_4_flow_critical(k4()), Error);
  EXPECT_THROW(circular_flow(k4(), 3, 2), Error);
}

TEST(FlowsTest, BridgesRejected) {
  MultiGraph bridged(2, {{0, 1}});
  EXPECT_THROW(flow_number(bridged), Error);
  EXPECT_THROW(nowhere_zero_group_flow(bridged, 3), Error);
  EXPECT_FALSE(has_nowhere_zero_flow(bridged, 5));
  // A bridge forces a zero edge in any Klein flow.
  EXPECT_EQ(flow_resistance(bridged).value, 1);
}

TEST(FlowsTest, FlowNumberMatchesBruteForce) {
  for (int n = 4; n <= 6; n += 2) {
    for (const CubicGraph& g : testing::bridgeless_corpus(n)) {
      int expected = 2;
      while (!group_flow_oracle(g, expected)) ++expected;
      EXPECT_EQ(flow_number(g), expected);
      for (int k = 2; k <= 6; ++k) {
        EXPECT_EQ(has_nowhere_zero_flow(g, k), k >= expected);
      }
    }
  }
  MultiGraph theta(2, {{0, 1}, {0, 1}, {0, 1}});
  EXPECT_EQ(flow_number(theta), 3);
  EXPECT_TRUE(group_flow_oracle(theta, 3));
  EXPECT_FALSE(group_flow_oracle(theta, 2));
}

TEST(FlowsTest, GroupFlowWitnessesOnCorpus) {
  for (const CubicGraph& g : testing::bridgeless_corpus(10)) {
    for (int k = 3; k <= 6; ++k) {
      auto flow = nowhere_zero_group_flow(g, k);
      EXPECT_EQ(flow.has_value(), has_nowhere_zero_flow(g, k));
      if (flow) EXPECT_TRUE(verify_flow(g, *flow, FlowSpec::group(k)).ok);
    }
    // Cubic: a 4-flow exists exactly for class 1, a 3-flow for bipartite.
    EXPECT_EQ(has_nowhere_zero_flow(g, 4), chromatic_index(g) == 3);
    EXPECT_EQ(has_nowhere_zero_flow(g, 3), is_bipartite(g));
  }
}

TEST(FlowsTest, CircularFlowMatchesOrientationOracle) {
  for (int n = 4; n <= 10; n += 2) {
    for (const CubicGraph& g : testing::bridgeless_corpus(n)) {
      CircularFlowResult r = circular_flow_number(g);
      ASSERT_TRUE(r.exact);
      EXPECT_EQ(r.value, circular_flow_number_by_orientations(g));
      // No cubic graph has 3 < F_c < 4.
      EXPECT_FALSE(r.value > Fraction(3, 1) && r.value < Fraction(4, 1));
      EXPECT_EQ(r.value <= Fraction(4, 1), chromatic_index(g) == 3);
      if (r.witness) {
        EXPECT_TRUE(
            verify_flow(g, *r.witness,
                        FlowSpec::circular(static_cast<int>(r.value.num),
                                           static_cast<int>(r.value.den)))
                .ok);
      }
    }
  }
}

TEST(FlowsTest, CircularFlowOfFlowerSnark) {
  CircularFlowResult r = circular_flow_number(flower_snark(5));
  EXPECT_EQ(r.value, Fraction(9, 2));
  EXPECT_TRUE(r.exact);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_TRUE(
      verify_flow(flower_snark(5), *r.witness, FlowSpec::circular(9, 2)).ok);
}

TEST(FlowsTest, CircularFlowMonotone) {
  // Feasible at p/q implies feasible at any larger ratio.
  CubicGraph g = flower_snark(5);
  EXPECT_FALSE(circular_flow(g, 22, 5).has_value());
  EXPECT_TRUE(circular_flow(g, 9, 2).has_value());
  EXPECT_TRUE(circular_flow(g, 14, 3).has_value());
  EXPECT_TRUE(circular_flow(g, 5, 1).has_value());
}

TEST(FlowsTest, FlowResistanceRoutesAgreeOnCorpus) {
  for (int n = 4; n <= 12; n += 2) {
    for (const CubicGraph& g : testing::bridgeless_corpus(n)) {
      const int rf = flow_resistance(g).value;
      EXPECT_EQ(flow_resistance_by_cycle_space(g), rf);
      EXPECT_EQ(flow_resistance_by_cotree(g), rf);
      EXPECT_EQ(rf == 0, chromatic_index(g) == 3);
      EXPECT_LE(rf, gamma2(g).value);
    }
  }
}

TEST(FlowsTest, PhiPlusMatchesAugmentationOnCorpus) {
  for (int n = 4; n <= 10; n += 2) {
    for (const CubicGraph& g : testing::bridgeless_corpus(n)) {
      for (int k : {3, 4}) {
        PhiPlusResult r = phi_plus(g, k);
        auto brute = phi_plus_by_augmentation(g, k, r.value);
        ASSERT_TRUE(brute.has_value());
        EXPECT_EQ(brute->value, r.value) << k;
        // The witness augmentation really works.
        EXPECT_TRUE(has_nowhere_zero_flow(g.graph().with_edges(r.added), k));
        EXPECT_EQ(static_cast<int>(r.added.size()), r.value);
      }
      const int w = oddness(g).value;
      const int p4 = phi_plus(g, 4).value;
      EXPECT_LE(phi_plus(g, 3).value, n / 4);
      EXPECT_LE(p4, (n / 5 + 1) / 2);
      EXPECT_LE(2 * p4, w);
      EXPECT_LE(p4, flow_resistance(g).value);
    }
  }
}

TEST(FlowsTest, CriticalityProceduresAgreeOnCorpus) {
  int class2 = 0;
  for (int n = 4; n <= 12; n += 2) {
    for (const CubicGraph& g : testing::bridgeless_corpus(n)) {
      if (chromatic_index(g) == 3) continue;
      ++class2;
      // Throws if the two procedures disagree.
      FlowCriticality c = is_4_flow_critical(g);
      EXPECT_EQ(c.by_deletion, c.by_characterization);
      EXPECT_EQ(c.critical, c.failing_edges.empty());
    }
  }
  EXPECT_GT(class2, 0);
}

TEST(FlowsTest, FlowerSnarksAreCritical) {
  for (int k : {5, 7}) {
    FlowCriticality c = is_4_flow_critical(flower_snark(k));
    EXPECT_TRUE(c.critical) << k;
    EXPECT_EQ(c.cyclic_connectivity, k == 5 ? 5 : 6);
  }
}

TEST(FlowsTest, RandomMultigraphFlowResistance) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    MultiGraph g =
        testing::random_bridgeless_cubic(8 + 2 * (trial % 4), rng, false);
    const int rf = flow_resistance(g).value;
    EXPECT_EQ(flow_resistance_by_cycle_space(g), rf);
    EXPECT_EQ(flow_resistance_by_cotree(g), rf);
  }
}

}  // namespace
}  // namespace snark
