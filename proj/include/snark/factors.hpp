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

#ifndef SNARK_FACTORS_HPP_
#define SNARK_FACTORS_HPP_

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "snark/budget.hpp"
#include "snark/graph.hpp"

namespace snark {

// Sorted edge ids of a 1-factor.
using PerfectMatching = std::vector<EdgeId>;

// Every perfect matching exactly once, sorted lexicographically by their
// (sorted) edge id lists.
std::vector<PerfectMatching> perfect_matchings(const MultiGraph& g,
                                               const Budget& budget = {});

// Streaming variant in search order; return false from `visit` to stop.
void for_each_perfect_matching(
    const MultiGraph& g,
    const std::function<bool(const PerfectMatching&)>& visit,
    const Budget& budget = {});

bool is_perfect_matching(const MultiGraph& g, const std::vector<EdgeId>& m);

struct FactorComponent {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
  bool odd() const { return vertices.size() % 2 == 1; }
};

// Spanning subgraph with all degrees in {0, 2}: circuits and isolated
// vertices (the latter are odd components).
struct EvenFactor {
  std::vector<EdgeId> edges;
  std::vector<FactorComponent> components;
  bool is_two_factor = false;
  int odd_count() const;
};

// Validates degrees and splits the edge set into components. Throws
// kInvalidArgument on a vertex of degree other than 0 or 2.
EvenFactor describe_factor(const MultiGraph& g, std::vector<EdgeId> edges);

// Complement of a perfect matching in a cubic graph.
std::vector<EdgeId> complement_edges(const MultiGraph& g,
                                     const std::vector<EdgeId>& edges);

struct OddnessResult {
  int value = 0;
  EvenFactor witness;
};

// Oddness: fewest odd circuits in a 2-factor. Frontier DP over 2-factors.
// Throws kNoTwoFactor when g has no perfect matching.
OddnessResult oddness(const CubicGraph& g, const Budget& budget = {});

// Oddness as a fold over complements of perfect matchings, stopping early at
// 0, or at 2 when `class2_known`.
OddnessResult oddness_via_perfect_matchings(const CubicGraph& g,
                                            bool class2_known = false,
                                            const Budget& budget = {});

// Reference: enumerates 2-factors directly (two edges chosen at every vertex)
// without going through matchings. Small graphs only.
int oddness_by_two_factor_enumeration(const MultiGraph& g,
                                      const Budget& budget = {});

// Weak oddness: fewest odd components of an even factor.
OddnessResult weak_oddness(const CubicGraph& g, const Budget& budget = {});

// Reference: enumerates even factors directly. Small graphs only.
int weak_oddness_by_enumeration(const MultiGraph& g, const Budget& budget = {});

struct Gamma2Result {
  int value = 0;
  PerfectMatching m1;
  PerfectMatching m2;
};

// min |M1 ∩ M2| over pairs of perfect matchings (M1 = M2 allowed).
Gamma2Result gamma2(const CubicGraph& g, const Budget& budget = {});

// Same quantity by scanning all pairs of a matching list.
int gamma2_by_pair_scan(const std::vector<PerfectMatching>& matchings);

struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;
  Fraction() = default;
  Fraction(std::int64_t n, std::int64_t d);  // reduced, den > 0
  bool operator==(const Fraction&) const = default;
  auto operator<=>(const Fraction& o) const {
    return num * o.den <=> o.num * den;
  }
  double value() const { return static_cast<double>(num) / den; }
};

struct MuResult {
  int value = 0;                           // uncovered edges
  std::vector<PerfectMatching> matchings;  // an optimal list (k entries)
  Fraction covered;                        // m_k = 1 - mu_k / |E|
};

// mu_k: fewest edges missed by a list of k perfect matchings (repetition
// allowed). Exhaustive over nondecreasing index tuples of the matching list
// with a coverage bound.
MuResult mu_k(const CubicGraph& g, int k, const Budget& budget = {});
MuResult mu_k(const MultiGraph& g, const std::vector<PerfectMatching>& list,
              int k, const Budget& budget = {});

// mu_3 by frontier DP over matching triples; independent of the list.
int mu3_by_dp(const CubicGraph& g, const Budget& budget = {});

struct ExcessiveIndexResult {
  std::optional<int> value;  // empty: more than `cap` matchings needed
  int cap = 0;
  std::vector<PerfectMatching> cover;
};

// Smallest number of perfect matchings covering E: 3 for class 1,
// otherwise searched 4..cap.
ExcessiveIndexResult excessive_index(const CubicGraph& g, int cap,
                                     const Budget& budget = {});

struct CoreDecomposition {
  std::array<PerfectMatching, 3> matchings;
  // classes[i]: edges in exactly i of the three matchings.
  std::array<std::vector<EdgeId>, 4> classes;
  // Edge ids of G_c = G[E2 ∪ E3 ∪ E0].
  std::vector<EdgeId> core_edges;
  int num_edges = 0;

  bool is_proper() const {
    return static_cast<int>(core_edges.size()) < num_edges;
  }
  // Every vertex touched by the core has degree 2 in it (a disjoint union of
  // circuits).
  bool is_cyclic = false;
};

// Throws kNotAMatching if an input is not a perfect matching.
CoreDecomposition core_of(const CubicGraph& g,
                          const std::array<PerfectMatching, 3>& matchings);

}  // namespace snark

#endif  // SNARK_FACTORS_HPP_
