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

// Labelling rules for run_label_dp shared by the colouring, factor and flow
// solvers. Internal header.

#ifndef SNARK_SRC_RULES_HPP_
#define SNARK_SRC_RULES_HPP_

#include <cstdint>
#include <cstdlib>
#include <span>
#include <vector>

#include "snark/elimination.hpp"
#include "snark/graph.hpp"

namespace snark::rules {

struct RuleBase {
  std::int64_t initial_acc() const { return 0; }
  bool edge_allowed(EdgeId, int) const { return true; }
  std::int64_t edge_cost(EdgeId, int) const { return 0; }
  bool finish(std::int64_t, std::int64_t* cost) const {
    *cost = 0;
    return true;
  }
};

inline bool all_distinct(std::span<const int> labels) {
  unsigned seen = 0;
  for (int c : labels) {
    if (seen & (1u << c)) return false;
    seen |= 1u << c;
  }
  return true;
}

// Labels 0..2 are the Tait colours 1..3. Conflicts cost 1 each; with
// `normalized`, a vertex of degree 3 may not be monochromatic.
struct ConflictRule : RuleBase {
  bool normalized = false;
  bool forbid_conflicts = false;
  int bits() const { return 2; }
  int alphabet() const { return 3; }
  bool vertex(VertexId, std::span<const int> labels, std::int64_t acc,
              std::int64_t* cost, std::int64_t* acc_out) const {
    *acc_out = acc;
    if (all_distinct(labels)) {
      *cost = 0;
      return true;
    }
    if (forbid_conflicts) return false;
    if (normalized && labels.size() == 3 && labels[0] == labels[1] &&
        labels[1] == labels[2]) {
      return false;
    }
    *cost = 1;
    return true;
  }
};

// Proper colouring with labels 0..3; class 0 edges cost 1. `forced_zero`
// edges must take label 0.
struct Proper4Rule : RuleBase {
  std::vector<char> forced_zero;
  int bits() const { return 2; }
  int alphabet() const { return 4; }
  bool edge_allowed(EdgeId e, int label) const {
    return forced_zero.empty() || !forced_zero[e] || label == 0;
  }
  std::int64_t edge_cost(EdgeId, int label) const { return label == 0; }
  bool vertex(VertexId, std::span<const int> labels, std::int64_t acc,
              std::int64_t* cost, std::int64_t* acc_out) const {
    *acc_out = acc;
    *cost = 0;
    return all_distinct(labels);
  }
};

// Label 0 deletes the edge; labels 1..3 are colours that must be distinct at
// every vertex.
struct EdgeDeletionRule : RuleBase {
  int bits() const { return 2; }
  int alphabet() const { return 4; }
  std::int64_t edge_cost(EdgeId, int label) const { return label == 0; }
  bool vertex(VertexId, std::span<const int> labels, std::int64_t acc,
              std::int64_t* cost, std::int64_t* acc_out) const {
    *acc_out = acc;
    *cost = 0;
    unsigned seen = 0;
    for (int c : labels) {
      if (c == 0) continue;
      if (seen & (1u << c)) return false;
      seen |= 1u << c;
    }
    return true;
  }
};

// Vertex deletion. Labels: 0 = absent because the earlier endpoint was
// deleted, 1 = the later endpoint promises to be deleted, 2..4 = colours.
// Needs the elimination positions to tell incoming from outgoing edges.
struct VertexDeletionRule : RuleBase {
  const MultiGraph* g = nullptr;
  std::vector<int> position;
  int bits() const { return 3; }
  int alphabet() const { return 5; }
  bool vertex(VertexId v, std::span<const int> labels, std::int64_t acc,
              std::int64_t* cost, std::int64_t* acc_out) const {
    *acc_out = acc;
    auto inc = g->incident(v);
    int outs = 0, absent_outs = 0;
    bool promise_in = false;
    unsigned seen = 0;
    bool distinct = true;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      bool out = position[g->other(inc[i], v)] > position[v];
      int c = labels[i];
      if (out) {
        ++outs;
        if (c == 0) ++absent_outs;
      } else if (c == 1) {
        promise_in = true;
      }
      if (c >= 2) {
        if (seen & (1u << c)) distinct = false;
        seen |= 1u << c;
      }
    }
    if (absent_outs > 0) {
      // Deleted vertex: every outgoing edge is absent.
      if (absent_outs != outs) return false;
      *cost = 1;
      return true;
    }
    if (!promise_in && distinct) {
      *cost = 0;
      return true;
    }
    // A vertex whose edges all go backwards may still choose deletion; one
    // with live outgoing edges may not.
    if (outs == 0) {
      *cost = 1;
      return true;
    }
    return false;
  }
};

// Two disjoint matchings: label 0 unused, 1 and 2 the two sides.
struct TwoColorRule : RuleBase {
  int bits() const { return 2; }
  int alphabet() const { return 3; }
  std::int64_t edge_cost(EdgeId, int label) const { return label == 0; }
  bool vertex(VertexId, std::span<const int> labels, std::int64_t acc,
              std::int64_t* cost, std::int64_t* acc_out) const {
    *acc_out = acc;
    *cost = 0;
    bool one = false, two = false;
    for (int c : labels) {
      if (c == 1) {
        if (one) return false;
        one = true;
      } else if (c == 2) {
        if (two) return false;
        two = true;
      }
    }
    return true;
  }
};

// Klein-group flow: labels are Boole colours, vertex sums vanish, zero edges
// cost 1. With `nowhere_zero` the value 0 is excluded.
struct KleinFlowRule : RuleBase {
  bool nowhere_zero = false;
  int bits() const { return 2; }
  int alphabet() const { return 4; }
  bool edge_allowed(EdgeId, int label) const {
    return !nowhere_zero || label != 0;
  }
  std::int64_t edge_cost(EdgeId, int label) const { return label == 0; }
  bool vertex(VertexId, std::span<const int> labels, std::int64_t acc,
              std::int64_t* cost, std::int64_t* acc_out) const {
    *acc_out = acc;
    *cost = 0;
    int sum = 0;
    for (int c : labels) sum ^= c;
    return sum == 0;
  }
};

// k perfect matchings at once: bit i of a label puts the edge in matching i.
// Each vertex meets every matching exactly once. Cost counts edges in no
// matching (`count_uncovered`) or in both of two matchings (otherwise).
struct MatchingTupleRule : RuleBase {
  int k = 2;
  bool count_uncovered = true;
  int bits() const { return k; }
  int alphabet() const { return 1 << k; }
  std::int64_t edge_cost(EdgeId, int label) const {
    if (count_uncovered) return label == 0;
    return label == (1 << k) - 1;
  }
  bool vertex(VertexId, std::span<const int> labels, std::int64_t acc,
              std::int64_t* cost, std::int64_t* acc_out) const {
    *acc_out = acc;
    *cost = 0;
    int seen = 0;
    for (int c : labels) {
      if (seen & c) return false;
      seen |= c;
    }
    return seen == (1 << k) - 1;
  }
};

// Extension to a nowhere-zero Klein flow by adding edges. Labels are nonzero
// Boole colours; a vertex with nonzero sum must be an endpoint of an added
// edge. Cost is in half edges: one per such vertex, plus one at the end when
// the counts of each nonzero sum type are odd (one three-vertex tree).
struct KleinExtensionRule : RuleBase {
  int bits() const { return 2; }
  int alphabet() const { return 4; }
  bool edge_allowed(EdgeId, int label) const { return label != 0; }
  bool vertex(VertexId, std::span<const int> labels, std::int64_t acc,
              std::int64_t* cost, std::int64_t* acc_out) const {
    int sum = 0;
    for (int c : labels) sum ^= c;
    *cost = sum != 0;
    *acc_out = acc ^ (sum == 1);
    return true;
  }
  bool finish(std::int64_t acc, std::int64_t* cost) const {
    *cost = acc;
    return true;
  }
};

// Extension to a nowhere-zero Z_3 flow. Label 0 carries value 1 and label 1
// value 2 along the reference orientation (lower id to higher id). Cost is in
// sixths of an edge: 3 per vertex with nonzero net outflow, plus |n1 - n2|
// at the end, where n_s counts vertices of net outflow s.
struct Z3ExtensionRule : RuleBase {
  const MultiGraph* g = nullptr;
  int bits() const { return 1; }
  int alphabet() const { return 2; }
  bool vertex(VertexId v, std::span<const int> labels, std::int64_t acc,
              std::int64_t* cost, std::int64_t* acc_out) const {
    auto inc = g->incident(v);
    int net = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      int value = labels[i] + 1;
      bool tail = g->other(inc[i], v) > v;
      net += tail ? value : 3 - value;
    }
    net %= 3;
    *cost = net != 0 ? 3 : 0;
    *acc_out = acc + (net == 1 ? 1 : net == 2 ? -1 : 0);
    return true;
  }
  bool finish(std::int64_t acc, std::int64_t* cost) const {
    *cost = std::llabs(acc);
    return true;
  }
};

inline std::vector<int> positions(const EliminationPlan& plan, int n) {
  std::vector<int> pos(n, 0);
  for (int i = 0; i < static_cast<int>(plan.steps.size()); ++i) {
    pos[plan.steps[i].vertex] = i;
  }
  return pos;
}

}  // namespace snark::rules

#endif  // SNARK_SRC_RULES_HPP_
