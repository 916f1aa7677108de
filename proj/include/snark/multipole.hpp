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

#ifndef SNARK_MULTIPOLE_HPP_
#define SNARK_MULTIPOLE_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "snark/budget.hpp"
#include "snark/coloring.hpp"
#include "snark/graph.hpp"

namespace snark {

// A semiedge hangs off a vertex, or is one half of an isolated edge (then
// `vertex` is -1 and `partner` is the index of the other half).
struct Semiedge {
  VertexId vertex = -1;
  int partner = -1;

  bool operator==(const Semiedge&) const = default;
};

// Graph fragment with an ordered list of semiedges. Every vertex has degree
// 3, counting incident edges and semiedges.
class Multipole {
 public:
  Multipole() = default;
  // Throws kInvalidArgument unless the degree and partner conventions hold.
  Multipole(int num_vertices, std::vector<Edge> edges,
            std::vector<Semiedge> semiedges);

  int num_vertices() const { return num_vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Semiedge>& semiedges() const { return semiedges_; }
  int arity() const { return static_cast<int>(semiedges_.size()); }

  bool operator==(const Multipole&) const = default;

 private:
  int num_vertices_ = 0;
  std::vector<Edge> edges_;
  std::vector<Semiedge> semiedges_;
};

// Text format:
//   n m s
//   m lines "u v"            (internal edges)
//   s lines "v <vertex>" or "p <index>"  (attached / isolated-edge half)
// Blank lines and lines starting with '#' are ignored.
Multipole parse_multipole(const std::string& text);
std::string write_multipole(const Multipole& m);

// Colours 1..3 on the semiedges, in semiedge order.
using ColTuple = std::vector<std::uint8_t>;

// Sorted, duplicate-free set of boundary colourings of one arity.
struct ColSet {
  int arity = 0;
  std::vector<ColTuple> tuples;

  bool empty() const { return tuples.empty(); }
  std::size_t size() const { return tuples.size(); }
  bool contains(const ColTuple& t) const;
  bool operator==(const ColSet&) const = default;
};

// Boundary colourings of all Tait colourings of `m` (exhaustive).
ColSet tait_colorings(const Multipole& m, const Budget& budget = {});

// Every tuple of length m whose colour counts satisfy the Parity Lemma.
ColSet parity_feasible_tuples(int arity);

bool is_color_complete(const Multipole& m, const Budget& budget = {});
// Throws kArityMismatch when the arities differ.
bool are_color_disjoint(const Multipole& a, const Multipole& b,
                        const Budget& budget = {});
bool is_subset(const ColSet& a, const ColSet& b);
// Reorders tuple coordinates: result position i takes coordinate order[i].
ColSet permute(const ColSet& s, const std::vector<int>& order);

// Identifies semiedge first of each pair in `a` with semiedge second in `b`.
// Vertices of `b` follow those of `a`; unpaired semiedges keep their
// relative order, those of `a` first. Throws kInvalidPairing for repeated
// or out-of-range indices and for pairings that close a vertex-free circuit.
Multipole join(const Multipole& a, const Multipole& b,
               const std::vector<std::pair<int, int>>& pairing);
// Full pairing: the result has no semiedges and is returned as a graph.
MultiGraph join_to_graph(const Multipole& a, const Multipole& b,
                         const std::vector<std::pair<int, int>>& pairing);

struct SplitResult {
  Multipole first;  // side containing the first endpoint of cut[0]
  Multipole second;
  // Old vertex ids, in the new order of each side.
  std::vector<VertexId> first_vertices;
  std::vector<VertexId> second_vertices;
};
// Semiedge i of both sides comes from cut edge i, so joining with the
// identity pairing rebuilds the graph. Throws kNotACut unless removing `cut`
// leaves every cut edge between the same two nonempty sides.
SplitResult split(const MultiGraph& g, const std::vector<EdgeId>& cut);
std::vector<std::pair<int, int>> identity_pairing(int arity);

bool parity_check(int m1, int m2, int m3, int m);
// Boole parity of the conflicting vertices of a 3-edge-colouring: the
// numbers of conflicts of each type 1_1, 1_2, 1_3 agree mod 2.
bool boole_parity_check(const ConflictWitness& witness);

// Petersen graph minus the path 7-0-8, with semiedges grouped into the
// input pair X1 (positions 0, 1), output pair X2 (2, 3) and e (4).
Multipole not_gate();

// The fragment not_gate() is built from, with semiedges ordered by removed
// vertex (7, 0, 8) then by the surviving neighbour.
Multipole not_gate_fragment();

struct Grouping {
  std::array<int, 2> x1;
  std::array<int, 2> x2;
  int e;
};
// All groupings of a 5-pole's semiedges (unordered pairs, X1 before X2 by
// smallest index) for which the NOT behaviour holds, in lexicographic order.
std::vector<Grouping> not_gate_groupings(const Multipole& fragment);

struct NotGateCheck {
  bool ok = true;
  ColTuple counterexample;
};
// Over every boundary colouring (x1a, x1b, x2a, x2b, e): the Boole value of
// X2 is 0 exactly when that of X1 is not 0.
NotGateCheck check_not_gate(const Multipole& m, const Budget& budget = {});

// Odd ring of k NOT gates (X2 of gate i joined to X1 of gate i+1), with the
// k semiedges e closed off by a path of k - 2 connector vertices.
CubicGraph loupekhine(int k);

// Smallest multipole N with fewer vertices than m, at most `vertex_budget`
// vertices, and a nonempty Col(N) contained in Col(m). Candidates are
// enumerated structurally and tried under every semiedge order.
std::optional<Multipole> find_reduction(const Multipole& m, int vertex_budget,
                                        const Budget& budget = {});

}  // namespace snark

#endif  // SNARK_MULTIPOLE_HPP_
