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

#ifndef SNARK_FLOWS_HPP_
#define SNARK_FLOWS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "snark/budget.hpp"
#include "snark/factors.hpp"
#include "snark/graph.hpp"
#include "snark/klein.hpp"

namespace snark {

// Reference orientation: every edge points from its lower endpoint id to the
// higher one. Integer flow values are signed relative to it.
VertexId flow_tail(const MultiGraph& g, EdgeId e);
VertexId flow_head(const MultiGraph& g, EdgeId e);

// What a flow is checked against.
struct FlowSpec {
  enum class Kind {
    kGroup,     // values are residues mod k, nowhere-zero: 1..k-1
    kInteger,   // integer k-flow: 1 <= |value| <= k-1
    kCircular,  // (p, q): q <= |value| <= p - q
  };
  Kind kind = Kind::kInteger;
  int k = 0;
  int p = 0;
  int q = 1;

  static FlowSpec group(int k) { return {Kind::kGroup, k, 0, 1}; }
  static FlowSpec integer(int k) { return {Kind::kInteger, k, 0, 1}; }
  static FlowSpec circular(int p, int q) { return {Kind::kCircular, 0, p, q}; }
};

struct IntegerFlow {
  std::vector<int> value;  // per edge id, relative to the reference orientation
};

struct KleinFlow {
  std::vector<BooleColor> value;  // per edge id

  int zero_count() const;
};

struct FlowCheck {
  bool ok = true;
  VertexId vertex = -1;  // first vertex violating conservation
  EdgeId edge = -1;      // first edge violating the value range
  std::string reason;
};

FlowCheck verify_flow(const MultiGraph& g, const IntegerFlow& flow,
                      const FlowSpec& spec);
// Conservation of a Klein flow; with `nowhere_zero` every value must be
// nonzero.
FlowCheck verify_klein_flow(const MultiGraph& g, const KleinFlow& flow,
                            bool nowhere_zero);

// Nowhere-zero Z_k flow (k in 2..6) by co-tree backtracking: values on the
// edges outside a DFS tree fix the tree edges through conservation. The
// witness is the group flow (FlowSpec::group(k)). Throws kBridgeDetected.
std::optional<IntegerFlow> nowhere_zero_group_flow(const MultiGraph& g, int k,
                                                   const Budget& budget = {});

// Existence of a nowhere-zero k-flow. k = 4 runs the Klein-group frontier
// program, k = 3 the Z_3 one, other k the co-tree search.
bool has_nowhere_zero_flow(const MultiGraph& g, int k,
                           const Budget& budget = {});

// Smallest k <= 6 with a nowhere-zero k-flow. Throws kBridgeDetected.
int flow_number(const MultiGraph& g, const Budget& budget = {});

// Integer flow with q <= |value| <= p - q on every edge: branch and bound
// over edge directions with a circulation feasibility test at every node.
std::optional<IntegerFlow> circular_flow(const MultiGraph& g, int p, int q,
                                         const Budget& budget = {});

struct CircularFlowResult {
  Fraction value;
  // False when no fraction up to the denominator cap was feasible below 5
  // and no 5-flow exists either (value then holds the best upper bound
  // found, 6 from Seymour's theorem if nothing else).
  bool exact = true;
  std::optional<IntegerFlow> witness;  // circular (p, q) witness, if searched
};

// Bipartite graphs give 3 and class-1 graphs 4; otherwise the least feasible
// fraction p/q in (4, 5] with q <= q_cap, found by bisection over the sorted
// candidates (feasibility is monotone). `exact` holds when q_cap covers
// every denominator an optimum can have (4 q_cap >= |E| - 1). Throws
// kBridgeDetected.
CircularFlowResult circular_flow_number(const CubicGraph& g, int q_cap = 10,
                                        const Budget& budget = {});

// Exact F_c from the orientation characterisation: 1 + the minimum over
// orientations of the maximum over cuts of |out| / |in|. Exponential in
// |E| + |V|; for graphs with at most 24 edges.
Fraction circular_flow_number_by_orientations(const MultiGraph& g);

struct FlowResistanceResult {
  int value = 0;
  KleinFlow witness;  // with `value` zero edges
};

// Minimum number of zero edges of a Klein-group flow (frontier program).
FlowResistanceResult flow_resistance(const MultiGraph& g,
                                     const Budget& budget = {});
// Same, as |E| minus the largest union of two even subgraphs, scanning all
// pairs of cycle-space elements. Dimension at most 14.
int flow_resistance_by_cycle_space(const MultiGraph& g);
// Same, by branch and bound over Klein values on the co-tree edges.
int flow_resistance_by_cotree(const MultiGraph& g, const Budget& budget = {});

struct PhiPlusResult {
  int value = 0;
  std::vector<Edge> added;  // endpoints of the added edges
};

// Minimum number of added edges (loops excluded, parallel edges allowed)
// for a nowhere-zero k-flow, k in {3, 4, 5}. k = 3 and 4 minimise over
// nowhere-zero group labellings of G the cost of cancelling the vertex
// sums; k = 5 tries augmentations of increasing size.
PhiPlusResult phi_plus(const CubicGraph& g, int k, const Budget& budget = {});

// Exhaustive augmentation: every multiset of t vertex pairs for t = 0, 1,
// ..., max_added. Returns nothing if none of them works.
std::optional<PhiPlusResult> phi_plus_by_augmentation(
    const MultiGraph& g, int k, int max_added, const Budget& budget = {});

struct FlowCriticality {
  bool critical = false;
  bool by_deletion = false;
  bool by_characterization = false;
  // Edges whose deletion leaves no nowhere-zero 4-flow.
  std::vector<EdgeId> failing_edges;
  // Per edge: a perfect matching whose complementary 2-factor has exactly
  // two odd circuits, one through each end of the edge (empty if none).
  std::vector<PerfectMatching> certificates;
  int cyclic_connectivity = 0;
};

// Both decision procedures; throws Error(kInvalidArgument) if they
// disagree and kNotClass2 for a 3-edge-colourable input.
FlowCriticality is_4_flow_critical(const CubicGraph& g,
                                   const Budget& budget = {});

}  // namespace snark

#endif  // SNARK_FLOWS_HPP_
