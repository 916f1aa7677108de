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

#ifndef SNARK_STRUCTURE_HPP_
#define SNARK_STRUCTURE_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "snark/budget.hpp"
#include "snark/graph.hpp"

namespace snark {

inline constexpr int kInfiniteGirth = -1;
inline constexpr int kNoCyclicCut = -1;

enum class Hamiltonicity { kHamiltonian, kHypohamiltonian, kNeither };
const char* hamiltonicity_name(Hamiltonicity h);

struct StructureProfile {
  std::vector<EdgeId> bridges;
  int girth = kInfiniteGirth;
  std::vector<std::pair<EdgeId, EdgeId>> two_edge_cuts;
  // kNoCyclicCut when no edge cut leaves a cycle on both sides.
  int cyclic_edge_connectivity = kNoCyclicCut;
  Hamiltonicity hamiltonicity = Hamiltonicity::kNeither;
};

// Number of connected components; `component` (optional) receives a label
// in [0, count) per vertex.
int connected_components(const MultiGraph& g,
                         std::vector<int>* component = nullptr);

// Bridges by low-link; parallel edges are never bridges.
std::vector<EdgeId> bridges(const MultiGraph& g);

// Length of a shortest cycle (2 for a parallel pair), or kInfiniteGirth.
int girth(const MultiGraph& g);

bool is_bipartite(const MultiGraph& g);

// Unordered edge pairs whose removal disconnects a connected graph while
// neither edge alone does.
std::vector<std::pair<EdgeId, EdgeId>> two_edge_cuts(const MultiGraph& g);

// Minimum size of an edge cut with a cycle on each side. Candidate cycle
// pairs are seeded from shortest cycles through every edge and every cycle of
// length at most girth + 2; each vertex-disjoint pair is separated by a max
// flow. `witness` (optional) receives the cut edges.
int cyclic_edge_connectivity(const MultiGraph& g,
                             std::vector<EdgeId>* witness = nullptr);

// Reference implementation by enumerating every vertex bipartition. Only for
// graphs with at most 24 vertices.
int cyclic_edge_connectivity_brute_force(const MultiGraph& g);

// Hamilton circuit test on a graph of maximum degree 3 (divalent vertices
// allowed). Returns the circuit's edge ids, or nothing.
std::optional<std::vector<EdgeId>> hamilton_circuit(const MultiGraph& g,
                                                    const Budget& budget = {});

// Plain depth-first Hamilton circuit search; reference for small graphs.
bool has_hamilton_circuit_dfs(const MultiGraph& g);

// Hamiltonian, hypohamiltonian (not hamiltonian, every vertex-deleted
// subgraph hamiltonian) or neither.
Hamiltonicity hamiltonicity(const MultiGraph& g, const Budget& budget = {});

StructureProfile structure_profile(const CubicGraph& g,
                                   const Budget& budget = {});

// Removes every degree-2 vertex by merging its two edges. Throws kLoopCreated
// if a merge would produce a loop and kNotSubcubic on degrees outside {2, 3}.
CubicGraph suppress_divalent(const MultiGraph& g);

// Vertices of g reachable from `start` without using edges in `blocked`.
std::vector<char> reachable(const MultiGraph& g, VertexId start,
                            const std::vector<char>& blocked);

}  // namespace snark

#endif  // SNARK_STRUCTURE_HPP_
