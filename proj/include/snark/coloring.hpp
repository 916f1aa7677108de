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

#ifndef SNARK_COLORING_HPP_
#define SNARK_COLORING_HPP_

#include <array>
#include <optional>
#include <vector>

#include "snark/budget.hpp"
#include "snark/graph.hpp"
#include "snark/klein.hpp"

namespace snark {

inline constexpr int kUncolored = -1;

enum class Palette {
  kTait,     // colours 1..3, conflicts allowed
  kProper4,  // colours 0..3, proper; 0 is the distinguished class
};

struct EdgeColoring {
  Palette palette = Palette::kTait;
  std::vector<int> color;  // per edge id; kUncolored for unassigned

  int count(int c) const;
};

// Klein sum of the Boole colours of the edges at v. Throws
// kUncoloredEdgeAtVertex if an incident edge has no colour.
BooleColor boole_value(const MultiGraph& g, const EdgeColoring& col,
                       VertexId v);

// Vertices v with fewer distinct colours than deg(v).
std::vector<VertexId> conflicting_vertices(const MultiGraph& g,
                                           const EdgeColoring& col);

// True when no two edges sharing a vertex have the same colour.
bool is_proper(const MultiGraph& g, const EdgeColoring& col);

struct ConflictWitness {
  EdgeColoring coloring;
  std::vector<VertexId> conflicts;
  std::vector<BooleColor> types;  // Boole value of each conflicting vertex
  bool normalized = false;        // each conflict repeats exactly one colour
};

ConflictWitness make_conflict_witness(const MultiGraph& g, EdgeColoring col);

// 3 if a Tait colouring exists (written to `witness`), else 4.
int chromatic_index(const CubicGraph& g, EdgeColoring* witness = nullptr,
                    const Budget& budget = {});

// Tait colouring of a graph with maximum degree <= 3, if one exists.
std::optional<EdgeColoring> tait_coloring(const MultiGraph& g,
                                          const Budget& budget = {});

struct ConflictResult {
  int d = 0;
  ConflictWitness witness;  // normalized
};

// Minimum number of conflicting vertices over all 3-edge-colourings of a
// graph with maximum degree <= 3. Throws kNotSubcubic otherwise.
ConflictResult min_conflict_coloring(const MultiGraph& g,
                                     const Budget& budget = {});

// Independent depth-first branch and bound for the same quantity: edges in
// most-constrained-first order, pruned when conflicts reach the incumbent.
// Slower; used as a cross-check on small graphs.
int min_conflicts_branch_and_bound(const MultiGraph& g,
                                   const Budget& budget = {});

struct ResistanceResult {
  int r = 0;
  EdgeColoring coloring;  // proper 4-edge-colouring, |class 0| = r
};

// Smallest colour class of a proper 4-edge-colouring.
ResistanceResult resistance(const CubicGraph& g, const Budget& budget = {});

// Same, with some edges forced into class 0. Returns nothing if no proper
// 4-edge-colouring has them all in class 0.
std::optional<ResistanceResult> resistance_with_forced_zero(
    const MultiGraph& g, const std::vector<EdgeId>& forced,
    const Budget& budget = {});

// Minimum number of edges whose deletion leaves a 3-edge-colourable graph.
// The deleted set is not required to be a matching.
int edge_deletion_resistance(const MultiGraph& g,
                             std::vector<EdgeId>* deleted = nullptr,
                             const Budget& budget = {});

struct VertexResistanceResult {
  int rho = 0;
  std::vector<VertexId> vertices;
};

VertexResistanceResult vertex_resistance(const MultiGraph& g,
                                         const Budget& budget = {});

struct TwoColorableResult {
  int c2 = 0;
  int r2 = 0;  // (2/3)|E| - c2
  // Per edge: 0 unused, 1 or 2 the side of the 2-edge-colouring.
  std::vector<int> side;
};

// Largest edge set inducing a subgraph of chromatic index <= 2.
TwoColorableResult max_2_colorable(const CubicGraph& g,
                                   const Budget& budget = {});

// Exchanges colours a and b on the connected component of the {a, b}-coloured
// subgraph containing v. Throws kNoChainAtVertex if no edge at v has colour a
// or b.
EdgeColoring kempe_switch(const MultiGraph& g, const EdgeColoring& col,
                          VertexId v, std::array<int, 2> pair);

}  // namespace snark

#endif  // SNARK_COLORING_HPP_
