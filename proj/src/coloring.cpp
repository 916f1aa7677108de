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

#include "snark/coloring.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <vector>

#include <fmt/format.h>

#include "rules.hpp"
#include "snark/elimination.hpp"
#include "snark/structure.hpp"

namespace snark {

std::string to_string(BooleColor b) {
  switch (b) {
    case BooleColor::kZero:
      return "0";
    case BooleColor::kOne1:
      return "1_1";
    case BooleColor::kOne2:
      return "1_2";
    case BooleColor::kOne3:
      return "1_3";
  }
  return "?";
}

int EdgeColoring::count(int c) const {
  return static_cast<int>(std::count(color.begin(), color.end(), c));
}

BooleColor boole_value(const MultiGraph& g, const EdgeColoring& col,
                       VertexId v) {
  BooleColor sum = BooleColor::kZero;
  for (EdgeId e : g.incident(v)) {
    int c = col.color.at(e);
    if (c == kUncolored || c < 0 || c > 3) {
      throw Error(ErrorKind::kUncoloredEdgeAtVertex,
                  fmt::format("edge {} at vertex {} has no colour", e, v));
    }
    sum = klein_add(sum, boole_of_color(c));
  }
  return sum;
}

std::vector<VertexId> conflicting_vertices(const MultiGraph& g,
                                           const EdgeColoring& col) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    unsigned seen = 0;
    int distinct = 0;
    for (EdgeId e : g.incident(v)) {
      int c = col.color[e];
      if (c == kUncolored) continue;
      if (!(seen & (1u << c))) ++distinct;
      seen |= 1u << c;
    }
    if (distinct < g.degree(v)) out.push_back(v);
  }
  return out;
}

bool is_proper(const MultiGraph& g, const EdgeColoring& col) {
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    unsigned seen = 0;
    for (EdgeId e : g.incident(v)) {
      int c = col.color[e];
      if (c == kUncolored) return false;
      if (seen & (1u << c)) return false;
      seen |= 1u << c;
    }
  }
  return true;
}

ConflictWitness make_conflict_witness(const MultiGraph& g, EdgeColoring col) {
  ConflictWitness w;
  w.conflicts = conflicting_vertices(g, col);
  w.normalized = true;
  for (VertexId v : w.conflicts) {
    w.types.push_back(boole_value(g, col, v));
    unsigned seen = 0;
    int distinct = 0;
    for (EdgeId e : g.incident(v)) {
      if (!(seen & (1u << col.color[e]))) ++distinct;
      seen |= 1u << col.color[e];
    }
    if (distinct != g.degree(v) - 1) w.normalized = false;
  }
  w.coloring = std::move(col);
  return w;
}

namespace {

void require_subcubic(const MultiGraph& g) {
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) > 3) {
      throw Error(ErrorKind::kNotSubcubic,
                  fmt::format("vertex {} has degree {}", v, g.degree(v)));
    }
  }
}

EdgeColoring tait_from_labels(const std::vector<int>& labels) {
  EdgeColoring col;
  col.palette = Palette::kTait;
  col.color.resize(labels.size());
  for (std::size_t e = 0; e < labels.size(); ++e) col.color[e] = labels[e] + 1;
  return col;
}

}  // namespace

std::optional<EdgeColoring> tait_coloring(const MultiGraph& g,
                                          const Budget& budget) {
  require_subcubic(g);
  rules::ConflictRule rule;
  rule.forbid_conflicts = true;
  LabelDpResult r = run_label_dp(g, plan_elimination(g), rule, budget, 0, true,
                                 "tait colouring");
  if (!r.feasible) return std::nullopt;
  return tait_from_labels(r.labels);
}

int chromatic_index(const CubicGraph& g, EdgeColoring* witness,
                    const Budget& budget) {
  std::optional<EdgeColoring> col = tait_coloring(g.graph(), budget);
  if (!col) return 4;
  if (witness != nullptr) *witness = std::move(*col);
  return 3;
}

ConflictResult min_conflict_coloring(const MultiGraph& g,
                                     const Budget& budget) {
  require_subcubic(g);
  EliminationPlan plan = plan_elimination(g);
  rules::ConflictRule plain;
  LabelDpResult any = run_label_dp(g, plan, plain, budget, kInfiniteCost, false,
                                   "conflict colouring");
  rules::ConflictRule normal;
  normal.normalized = true;
  LabelDpResult best = run_label_dp(g, plan, normal, budget, kInfiniteCost,
                                    true, "normalized conflict colouring");
  ConflictResult result;
  result.d = static_cast<int>(any.cost);
  if (!best.feasible || best.cost != any.cost) {
    // Normalisation never costs extra conflicts; reaching this is a bug.
    throw Error(ErrorKind::kInvalidArgument,
                fmt::format("normalized optimum {} differs from optimum {}",
                            best.cost, any.cost));
  }
  result.witness = make_conflict_witness(g, tait_from_labels(best.labels));
  return result;
}

int min_conflicts_branch_and_bound(const MultiGraph& g, const Budget& budget) {
  require_subcubic(g);
  const int m = g.num_edges();
  const int n = g.num_vertices();
  NodeMeter meter(budget, "conflict branch and bound");
  std::vector<int> color(m, 0);  // 0 = unassigned, else 1..3
  // count[v][c] = edges at v with colour c.
  std::vector<std::array<int, 4>> count(n, {0, 0, 0, 0});
  std::vector<char> conflicted(n, 0);
  int conflicts = 0;
  int best = n + 1;

  auto colored_neighbours = [&](EdgeId e) {
    int k = 0;
    for (VertexId v : {g.edge(e).u, g.edge(e).v}) {
      for (EdgeId f : g.incident(v)) {
        if (f != e && color[f] != 0) ++k;
      }
    }
    return k;
  };

  std::function<void(int, int)> search = [&](int assigned, int max_used) {
    meter.tick(best <= n ? best : 0, best <= n);
    if (conflicts >= best) return;
    if (assigned == m) {
      best = conflicts;
      return;
    }
    // Most constrained uncoloured edge; ties by id.
    EdgeId pick = -1;
    int pick_score = -1;
    for (EdgeId e = 0; e < m; ++e) {
      if (color[e] != 0) continue;
      int s = colored_neighbours(e);
      if (s > pick_score) {
        pick_score = s;
        pick = e;
      }
    }
    // Colours above max_used + 1 are symmetric to max_used + 1.
    int limit = std::min(3, max_used + 1);
    for (int c = 1; c <= limit; ++c) {
      int added = 0;
      std::array<VertexId, 2> ends{g.edge(pick).u, g.edge(pick).v};
      color[pick] = c;
      for (VertexId v : ends) {
        ++count[v][c];
        if (count[v][c] >= 2 && !conflicted[v]) {
          conflicted[v] = 1;
          ++conflicts;
          ++added;
        }
      }
      search(assigned + 1, std::max(max_used, c));
      for (VertexId v : ends) {
        --count[v][c];
      }
      if (added > 0) {
        for (VertexId v : ends) {
          if (conflicted[v]) {
            bool still = false;
            for (int k = 1; k <= 3; ++k) still |= count[v][k] >= 2;
            if (!still) {
              conflicted[v] = 0;
              --conflicts;
            }
          }
        }
      }
      color[pick] = 0;
    }
  };
  search(0, 0);
  return best;
}

ResistanceResult resistance(const CubicGraph& g, const Budget& budget) {
  std::optional<ResistanceResult> r =
      resistance_with_forced_zero(g.graph(), {}, budget);
  return *r;  // a proper 4-edge-colouring always exists on cubic graphs
}

std::optional<ResistanceResult> resistance_with_forced_zero(
    const MultiGraph& g, const std::vector<EdgeId>& forced,
    const Budget& budget) {
  require_subcubic(g);
  rules::Proper4Rule rule;
  if (!forced.empty()) {
    rule.forced_zero.assign(g.num_edges(), 0);
    for (EdgeId e : forced) rule.forced_zero.at(e) = 1;
  }
  LabelDpResult r = run_label_dp(g, plan_elimination(g), rule, budget,
                                 kInfiniteCost, true, "proper 4-colouring");
  if (!r.feasible) return std::nullopt;
  ResistanceResult out;
  out.r = static_cast<int>(r.cost);
  out.coloring.palette = Palette::kProper4;
  out.coloring.color = r.labels;
  return out;
}

int edge_deletion_resistance(const MultiGraph& g, std::vector<EdgeId>* deleted,
                             const Budget& budget) {
  require_subcubic(g);
  rules::EdgeDeletionRule rule;
  LabelDpResult r =
      run_label_dp(g, plan_elimination(g), rule, budget, kInfiniteCost,
                   deleted != nullptr, "edge deletion");
  if (deleted != nullptr) {
    deleted->clear();
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      if (r.labels[e] == 0) deleted->push_back(e);
    }
  }
  return static_cast<int>(r.cost);
}

VertexResistanceResult vertex_resistance(const MultiGraph& g,
                                         const Budget& budget) {
  require_subcubic(g);
  EliminationPlan plan = plan_elimination(g);
  rules::VertexDeletionRule rule;
  rule.g = &g;
  rule.position = rules::positions(plan, g.num_vertices());
  LabelDpResult r = run_label_dp(g, plan, rule, budget, kInfiniteCost, true,
                                 "vertex deletion");
  VertexResistanceResult out;
  out.rho = static_cast<int>(r.cost);
  // Recover the deleted vertices: those with an absent outgoing edge, or
  // with only incoming edges that cannot be kept.
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    auto inc = g.incident(v);
    std::vector<int> labels;
    for (EdgeId e : inc) labels.push_back(r.labels[e]);
    std::int64_t cost = 0, acc = 0;
    rule.vertex(v, labels, 0, &cost, &acc);
    if (cost == 1) out.vertices.push_back(v);
  }
  return out;
}

TwoColorableResult max_2_colorable(const CubicGraph& g, const Budget& budget) {
  if (!bridges(g.graph()).empty()) {
    throw Error(ErrorKind::kBridgeDetected,
                "max_2_colorable needs a "
                "bridgeless graph");
  }
  rules::TwoColorRule rule;
  LabelDpResult r = run_label_dp(g.graph(), plan_elimination(g.graph()), rule,
                                 budget, kInfiniteCost, true, "2-colourable");
  TwoColorableResult out;
  out.c2 = g.num_edges() - static_cast<int>(r.cost);
  out.r2 = 2 * g.num_edges() / 3 - out.c2;
  out.side = r.labels;
  return out;
}

EdgeColoring kempe_switch(const MultiGraph& g, const EdgeColoring& col,
                          VertexId v, std::array<int, 2> pair) {
  auto in_pair = [&](EdgeId e) {
    return col.color[e] == pair[0] || col.color[e] == pair[1];
  };
  bool any = false;
  for (EdgeId e : g.incident(v)) any |= in_pair(e);
  if (!any || pair[0] == pair[1]) {
    throw Error(
        ErrorKind::kNoChainAtVertex,
        fmt::format("no ({}, {}) chain at vertex {}", pair[0], pair[1], v));
  }
  EdgeColoring out = col;
  std::vector<char> seen_vertex(g.num_vertices(), 0);
  std::vector<char> seen_edge(g.num_edges(), 0);
  std::vector<VertexId> stack{v};
  seen_vertex[v] = 1;
  while (!stack.empty()) {
    VertexId x = stack.back();
    stack.pop_back();
    for (EdgeId e : g.incident(x)) {
      if (!in_pair(e) || seen_edge[e]) continue;
      seen_edge[e] = 1;
      out.color[e] = col.color[e] == pair[0] ? pair[1] : pair[0];
      VertexId y = g.other(e, x);
      if (!seen_vertex[y]) {
        seen_vertex[y] = 1;
        stack.push_back(y);
      }
    }
  }
  return out;
}

}  // namespace snark
