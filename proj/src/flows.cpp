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

#include "snark/flows.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <functional>
#include <numeric>

#include <fmt/format.h>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/push_relabel_max_flow.hpp>

#include "rules.hpp"
#include "snark/coloring.hpp"
#include "snark/elimination.hpp"
#include "snark/structure.hpp"

namespace snark {

VertexId flow_tail(const MultiGraph& g, EdgeId e) {
  return std::min(g.edge(e).u, g.edge(e).v);
}

VertexId flow_head(const MultiGraph& g, EdgeId e) {
  return std::max(g.edge(e).u, g.edge(e).v);
}

int KleinFlow::zero_count() const {
  return static_cast<int>(
      std::count(value.begin(), value.end(), BooleColor::kZero));
}

namespace {

// +1 if v is the tail of e in the reference orientation, else -1.
int sign_at(const MultiGraph& g, EdgeId e, VertexId v) {
  return flow_tail(g, e) == v ? 1 : -1;
}

void require_no_bridge(const MultiGraph& g) {
  std::vector<EdgeId> b = bridges(g);
  if (!b.empty()) {
    throw Error(ErrorKind::kBridgeDetected,
                fmt::format("edge {} is a bridge; no nowhere-zero flow exists",
                            b.front()));
  }
}

}  // namespace

FlowCheck verify_flow(const MultiGraph& g, const IntegerFlow& flow,
                      const FlowSpec& spec) {
  FlowCheck out;
  if (static_cast<int>(flow.value.size()) != g.num_edges()) {
    out.ok = false;
    out.reason = "flow has the wrong number of values";
    return out;
  }
  const int modulus = spec.kind == FlowSpec::Kind::kGroup ? spec.k : 0;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const int x = flow.value[e];
    bool in_range = true;
    switch (spec.kind) {
      case FlowSpec::Kind::kGroup:
        in_range = x > 0 && x < spec.k;
        break;
      case FlowSpec::Kind::kInteger:
        in_range = std::abs(x) >= 1 && std::abs(x) <= spec.k - 1;
        break;
      case FlowSpec::Kind::kCircular:
        in_range = std::abs(x) >= spec.q && std::abs(x) <= spec.p - spec.q;
        break;
    }
    if (!in_range) {
      out.ok = false;
      out.edge = e;
      out.reason = fmt::format("edge {} has value {} out of range", e, x);
      return out;
    }
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    long long net = 0;
    for (EdgeId e : g.incident(v)) net += sign_at(g, e, v) * flow.value[e];
    if (modulus > 0) net %= modulus;
    if (net != 0) {
      out.ok = false;
      out.vertex = v;
      out.reason = fmt::format("conservation fails at vertex {}", v);
      return out;
    }
  }
  return out;
}

FlowCheck verify_klein_flow(const MultiGraph& g, const KleinFlow& flow,
                            bool nowhere_zero) {
  FlowCheck out;
  if (static_cast<int>(flow.value.size()) != g.num_edges()) {
    out.ok = false;
    out.reason = "flow has the wrong number of values";
    return out;
  }
  if (nowhere_zero) {
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      if (flow.value[e] == BooleColor::kZero) {
        out.ok = false;
        out.edge = e;
        out.reason = fmt::format("edge {} has value 0", e);
        return out;
      }
    }
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    BooleColor sum = BooleColor::kZero;
    for (EdgeId e : g.incident(v)) sum = klein_add(sum, flow.value[e]);
    if (sum != BooleColor::kZero) {
      out.ok = false;
      out.vertex = v;
      out.reason = fmt::format("conservation fails at vertex {}", v);
      return out;
    }
  }
  return out;
}

namespace {

// DFS spanning forest with the co-tree edges ordered so that subtrees close
// as early as possible. Once every co-tree edge touching the subtree of v is
// valued, conservation at v fixes the tree edge above v.
struct CotreeFrame {
  std::vector<EdgeId> parent_edge;  // -1 for roots
  std::vector<EdgeId> cotree;
  // close[i]: vertices whose parent edge is fixed once the first i co-tree
  // edges are valued, in post-order.
  std::vector<std::vector<VertexId>> close;
};

CotreeFrame make_frame(const MultiGraph& g) {
  const int n = g.num_vertices();
  CotreeFrame f;
  f.parent_edge.assign(n, -1);
  std::vector<char> visited(n, 0), tree_edge(g.num_edges(), 0);
  std::vector<VertexId> post;
  for (VertexId root = 0; root < n; ++root) {
    if (visited[root]) continue;
    std::vector<std::pair<VertexId, int>> stack{{root, 0}};
    visited[root] = 1;
    while (!stack.empty()) {
      auto& [v, i] = stack.back();
      auto inc = g.incident(v);
      if (i == static_cast<int>(inc.size())) {
        post.push_back(v);
        stack.pop_back();
        continue;
      }
      EdgeId e = inc[i++];
      VertexId w = g.other(e, v);
      if (visited[w]) continue;
      visited[w] = 1;
      f.parent_edge[w] = e;
      tree_edge[e] = 1;
      stack.push_back({w, 0});
    }
  }
  std::vector<int> order(g.num_edges(), -1);
  for (VertexId v : post) {
    for (EdgeId e : g.incident(v)) {
      if (!tree_edge[e] && order[e] < 0) {
        order[e] = static_cast<int>(f.cotree.size());
        f.cotree.push_back(e);
      }
    }
  }
  // step[v]: largest co-tree position touching the subtree of v.
  std::vector<int> step(n, -1);
  for (VertexId v : post) {
    for (EdgeId e : g.incident(v)) {
      if (!tree_edge[e]) step[v] = std::max(step[v], order[e]);
    }
    if (f.parent_edge[v] >= 0) {
      VertexId parent = g.other(f.parent_edge[v], v);
      step[parent] = std::max(step[parent], step[v]);
    }
  }
  f.close.assign(f.cotree.size() + 1, {});
  for (VertexId v : post) {
    if (f.parent_edge[v] >= 0) f.close[step[v] + 1].push_back(v);
  }
  return f;
}

// Flow values either in Z_modulus or in the integers (modulus 0); an edge
// value x is admissible when lo <= x <= hi (modular) or lo <= |x| <= hi.
struct FlowDomain {
  int modulus = 0;
  int lo = 1;
  int hi = 1;

  int normalize(long long x) const {
    if (modulus == 0) return static_cast<int>(x);
    return static_cast<int>(((x % modulus) + modulus) % modulus);
  }
  bool admissible(int x) const {
    if (modulus == 0) return std::abs(x) >= lo && std::abs(x) <= hi;
    return x >= lo && x <= hi;
  }
  // Candidate values in search order. With `half` only one of x and -x.
  std::vector<int> candidates(bool half) const {
    std::vector<int> out;
    if (modulus == 0) {
      for (int x = lo; x <= hi; ++x) {
        out.push_back(x);
        if (!half) out.push_back(-x);
      }
    } else {
      for (int x = lo; x <= hi; ++x) {
        if (!half || 2 * x <= modulus) out.push_back(x);
      }
    }
    return out;
  }
};

std::optional<IntegerFlow> cotree_flow_search(const MultiGraph& g,
                                              const FlowDomain& domain,
                                              const Budget& budget,
                                              const char* what) {
  const CotreeFrame f = make_frame(g);
  NodeMeter meter(budget, what);
  std::vector<int> value(g.num_edges(), 0);
  const std::vector<int> all = domain.candidates(false);
  const std::vector<int> half = domain.candidates(true);

  auto close = [&](int i) {
    for (VertexId v : f.close[i]) {
      const EdgeId pe = f.parent_edge[v];
      long long rest = 0;
      for (EdgeId e : g.incident(v)) {
        if (e != pe) rest += sign_at(g, e, v) * value[e];
      }
      const int x = domain.normalize(-sign_at(g, pe, v) * rest);
      if (!domain.admissible(x)) return false;
      value[pe] = x;
    }
    return true;
  };

  std::function<bool(int)> search = [&](int i) {
    meter.tick();
    if (!close(i)) return false;
    if (i == static_cast<int>(f.cotree.size())) return true;
    // Negating a flow gives a flow: fix the sign of the first co-tree edge.
    for (int x : i == 0 ? half : all) {
      value[f.cotree[i]] = x;
      if (search(i + 1)) return true;
    }
    return false;
  };
  if (!search(0)) return std::nullopt;
  return IntegerFlow{std::move(value)};
}

}  // namespace

std::optional<IntegerFlow> nowhere_zero_group_flow(const MultiGraph& g, int k,
                                                   const Budget& budget) {
  if (k < 2 || k > 6) {
    throw Error(ErrorKind::kInvalidArgument,
                fmt::format("k must be in 2..6, got {}", k));
  }
  require_no_bridge(g);
  return cotree_flow_search(g, FlowDomain{k, 1, k - 1}, budget,
                            "group flow search");
}

namespace {

bool klein_nowhere_zero(const MultiGraph& g, const Budget& budget) {
  rules::KleinFlowRule rule;
  rule.nowhere_zero = true;
  return run_label_dp(g, plan_elimination(g), rule, budget, 0, false,
                      "Klein flow")
      .feasible;
}

// Nowhere-zero Z_3 flow: the extension program at cost 0.
bool z3_nowhere_zero(const MultiGraph& g, const Budget& budget) {
  rules::Z3ExtensionRule rule;
  rule.g = &g;
  return run_label_dp(g, plan_elimination(g), rule, budget, 0, false, "Z3 flow")
      .feasible;
}

}  // namespace

bool has_nowhere_zero_flow(const MultiGraph& g, int k, const Budget& budget) {
  if (k < 2 || k > 6) {
    throw Error(ErrorKind::kInvalidArgument,
                fmt::format("k must be in 2..6, got {}", k));
  }
  if (!bridges(g).empty()) return false;
  if (k == 4) return klein_nowhere_zero(g, budget);
  if (k == 3 && g.max_degree() <= 3) return z3_nowhere_zero(g, budget);
  return nowhere_zero_group_flow(g, k, budget).has_value();
}

int flow_number(const MultiGraph& g, const Budget& budget) {
  require_no_bridge(g);
  for (int k = 2; k <= 6; ++k) {
    if (has_nowhere_zero_flow(g, k, budget)) return k;
  }
  throw Error(ErrorKind::kInvalidArgument,
              "no nowhere-zero 6-flow found in a bridgeless graph");
}

namespace {

using CirculationTraits =
    boost::adjacency_list_traits<boost::vecS, boost::vecS, boost::directedS>;
using CirculationGraph = boost::adjacency_list<
    boost::vecS, boost::vecS, boost::directedS, boost::no_property,
    boost::property<
        boost::edge_capacity_t, long,
        boost::property<boost::edge_residual_capacity_t, long,
                        boost::property<boost::edge_reverse_t,
                                        CirculationTraits::edge_descriptor>>>>;

// Edge e carries a value in [lo, hi] along the reference orientation.
struct Bounds {
  long lo;
  long hi;
};

// Integral circulation within the bounds, if one exists (Hoffman).
std::optional<std::vector<int>> feasible_circulation(
    const MultiGraph& g, const std::vector<Bounds>& bounds) {
  const int n = g.num_vertices();
  const int source = n, sink = n + 1;
  CirculationGraph net(n + 2);
  auto capacity = boost::get(boost::edge_capacity, net);
  auto reverse = boost::get(boost::edge_reverse, net);
  auto residual = boost::get(boost::edge_residual_capacity, net);
  auto add = [&](int a, int b, long cap) {
    auto forward = boost::add_edge(a, b, net).first;
    auto back = boost::add_edge(b, a, net).first;
    capacity[forward] = cap;
    capacity[back] = 0;
    reverse[forward] = back;
    reverse[back] = forward;
    return forward;
  };
  std::vector<long> excess(n, 0);
  std::vector<CirculationTraits::edge_descriptor> arc(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const int t = flow_tail(g, e), h = flow_head(g, e);
    arc[e] = add(t, h, bounds[e].hi - bounds[e].lo);
    excess[h] += bounds[e].lo;
    excess[t] -= bounds[e].lo;
  }
  long demand = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (excess[v] > 0) {
      add(source, v, excess[v]);
      demand += excess[v];
    } else if (excess[v] < 0) {
      add(v, sink, -excess[v]);
    }
  }
  if (boost::push_relabel_max_flow(net, source, sink) != demand) {
    return std::nullopt;
  }
  std::vector<int> value(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    value[e] =
        static_cast<int>(bounds[e].lo + capacity[arc[e]] - residual[arc[e]]);
  }
  return value;
}

}  // namespace

std::optional<IntegerFlow> circular_flow(const MultiGraph& g, int p, int q,
                                         const Budget& budget) {
  if (q < 1 || p < 2 * q) {
    throw Error(ErrorKind::kInvalidArgument,
                fmt::format("need p >= 2q >= 2, got {}/{}", p, q));
  }
  require_no_bridge(g);
  // Branch on edge directions. Undecided edges relax q <= |x| <= p - q to
  // |x| <= p - q; a relaxed circulation avoiding (-q, q) everywhere is a
  // witness, otherwise an offending edge is oriented both ways. A vertex
  // cannot be a source or a sink, which forces its last undecided edge once
  // all others point the same way.
  const long a = p - q;
  const int m = g.num_edges();
  std::vector<int> dir(m, 0);  // +1 along the reference orientation.
  std::vector<Bounds> bounds(m, Bounds{-a, a});
  std::vector<EdgeId> trail;
  auto assign = [&](EdgeId e, int d) {
    dir[e] = d;
    bounds[e] = d > 0 ? Bounds{q, a} : Bounds{-a, -q};
    trail.push_back(e);
  };
  auto undo = [&](std::size_t mark) {
    while (trail.size() > mark) {
      dir[trail.back()] = 0;
      bounds[trail.back()] = Bounds{-a, a};
      trail.pop_back();
    }
  };
  // Returns false on a source or sink.
  auto propagate = [&](std::size_t from) {
    for (std::size_t i = from; i < trail.size(); ++i) {
      const Edge& ends = g.edge(trail[i]);
      for (VertexId v : {ends.u, ends.v}) {
        int outs = 0, ins = 0;
        EdgeId free_edge = -1;
        int free_count = 0;
        for (EdgeId f : g.incident(v)) {
          if (dir[f] == 0) {
            free_edge = f;
            ++free_count;
          } else if (dir[f] * sign_at(g, f, v) > 0) {
            ++outs;
          } else {
            ++ins;
          }
        }
        if (free_count == 0 && (outs == 0 || ins == 0)) return false;
        if (free_count == 1 && (outs == 0 || ins == 0)) {
          // Point the free edge against the others.
          const int away = outs == 0 ? 1 : -1;
          assign(free_edge, away * sign_at(g, free_edge, v));
        }
      }
    }
    return true;
  };
  NodeMeter meter(budget, "circular flow search");
  std::function<std::optional<std::vector<int>>(bool)> search =
      [&](bool root) -> std::optional<std::vector<int>> {
    meter.tick();
    auto relaxed = feasible_circulation(g, bounds);
    if (!relaxed) return std::nullopt;
    EdgeId pick = -1;
    for (EdgeId e = 0; e < m; ++e) {
      if (std::abs((*relaxed)[e]) < q) {
        pick = e;
        break;
      }
    }
    if (pick < 0) return relaxed;
    const bool forward_first = (*relaxed)[pick] >= 0;
    for (int side = 0; side < 2; ++side) {
      // Negating a flow gives a flow, so the root needs one direction only.
      if (root && side == 1) break;
      const bool forward = (side == 0) == forward_first;
      const std::size_t mark = trail.size();
      assign(pick, forward ? 1 : -1);
      if (propagate(mark)) {
        auto found = search(false);
        if (found) return found;
      }
      undo(mark);
    }
    return std::nullopt;
  };
  auto value = search(true);
  if (!value) return std::nullopt;
  return IntegerFlow{std::move(*value)};
}

CircularFlowResult circular_flow_number(const CubicGraph& g, int q_cap,
                                        const Budget& budget) {
  if (q_cap < 1) throw Error(ErrorKind::kInvalidArgument, "q_cap must be >= 1");
  require_no_bridge(g);
  CircularFlowResult out;
  if (is_bipartite(g)) {
    out.value = Fraction(3, 1);
    return out;
  }
  if (klein_nowhere_zero(g, budget)) {
    out.value = Fraction(4, 1);
    return out;
  }
  // The optimum is 1 + a/b for the two sides of some edge cut, so its
  // denominator is below |E| / 4 when it lies in (4, 5].
  const bool cap_covers = 4 * q_cap >= g.num_edges() - 1;
  std::vector<Fraction> fractions;
  for (int q = 1; q <= q_cap; ++q) {
    for (int p = 4 * q + 1; p <= 5 * q; ++p) {
      if (std::gcd(p, q) == 1) fractions.emplace_back(p, q);
    }
  }
  std::sort(fractions.begin(), fractions.end());
  // Feasibility is monotone in p/q, so bisecting the sorted candidates finds
  // the least feasible one with few infeasible (expensive) tests.
  std::size_t lo = 0, hi = fractions.size();
  std::optional<IntegerFlow> best_witness;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    const Fraction& f = fractions[mid];
    auto witness = circular_flow(g, static_cast<int>(f.num),
                                 static_cast<int>(f.den), budget);
    if (witness) {
      hi = mid;
      best_witness = std::move(witness);
    } else {
      lo = mid + 1;
    }
  }
  if (lo < fractions.size()) {
    out.value = fractions[lo];
    out.exact = cap_covers;
    out.witness = std::move(best_witness);
    return out;
  }
  out.value = Fraction(6, 1);
  out.exact = false;
  return out;
}

Fraction circular_flow_number_by_orientations(const MultiGraph& g) {
  const int n = g.num_vertices();
  const int m = g.num_edges();
  if (m > 24 || n > 16 || m == 0) {
    throw Error(ErrorKind::kInvalidArgument,
                "orientation oracle limited to 24 edges and 16 vertices");
  }
  // Cuts containing vertex 0: edges leaving X and entering X under the
  // reference orientation.
  std::vector<std::uint32_t> fwd, bwd;
  for (std::uint32_t x = 1; x < (1u << n); x += 2) {
    if (x == (1u << n) - 1) continue;
    std::uint32_t f = 0, b = 0;
    for (EdgeId e = 0; e < m; ++e) {
      bool tail_in = (x >> flow_tail(g, e)) & 1;
      bool head_in = (x >> flow_head(g, e)) & 1;
      if (tail_in && !head_in) f |= 1u << e;
      if (!tail_in && head_in) b |= 1u << e;
    }
    fwd.push_back(f);
    bwd.push_back(b);
  }
  // Best ratio a/b seen so far; start above any finite ratio.
  long long best_a = 1, best_b = 0;
  // Reversing every edge leaves the maximum unchanged: keep edge 0 fixed.
  for (std::uint32_t rev = 0; rev < (1u << (m - 1)); ++rev) {
    const std::uint32_t o = rev << 1;
    long long worst_a = 0, worst_b = 1;
    bool pruned = false;
    for (std::size_t i = 0; i < fwd.size(); ++i) {
      long long out_edges = std::popcount((fwd[i] & ~o) | (bwd[i] & o));
      long long in_edges = std::popcount((bwd[i] & ~o) | (fwd[i] & o));
      long long a = std::max(out_edges, in_edges);
      long long b = std::min(out_edges, in_edges);
      if (a * worst_b > worst_a * b) {
        worst_a = a;
        worst_b = b;
      }
      // worst >= best: this orientation cannot improve.
      if (worst_a * best_b >= best_a * worst_b) {
        pruned = true;
        break;
      }
    }
    if (!pruned) {
      best_a = worst_a;
      best_b = worst_b;
    }
  }
  if (best_b == 0) {
    throw Error(ErrorKind::kBridgeDetected, "graph has a bridge");
  }
  return Fraction(best_a + best_b, best_b);
}

FlowResistanceResult flow_resistance(const MultiGraph& g,
                                     const Budget& budget) {
  rules::KleinFlowRule rule;
  LabelDpResult r = run_label_dp(g, plan_elimination(g), rule, budget,
                                 kInfiniteCost, true, "flow resistance");
  FlowResistanceResult out;
  out.value = static_cast<int>(r.cost);
  for (int label : r.labels) out.witness.value.push_back(boole_of_color(label));
  return out;
}

int flow_resistance_by_cycle_space(const MultiGraph& g) {
  const int m = g.num_edges();
  if (m > 64) {
    throw Error(ErrorKind::kInvalidArgument,
                "cycle-space scan needs <= 64 edges");
  }
  const CotreeFrame f = make_frame(g);
  const int dim = static_cast<int>(f.cotree.size());
  if (dim > 14) {
    throw Error(ErrorKind::kInvalidArgument,
                "cycle-space scan limited to dimension 14");
  }
  // Fundamental circuit of each co-tree edge: the edge plus the tree path.
  std::vector<int> depth(g.num_vertices(), 0);
  {
    // Depths along the DFS forest, parents before children.
    std::vector<VertexId> order;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (f.parent_edge[v] < 0) order.push_back(v);
    }
    std::vector<std::vector<VertexId>> children(g.num_vertices());
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (f.parent_edge[v] >= 0) {
        children[g.other(f.parent_edge[v], v)].push_back(v);
      }
    }
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (VertexId c : children[order[i]]) {
        depth[c] = depth[order[i]] + 1;
        order.push_back(c);
      }
    }
  }
  std::vector<std::uint64_t> basis;
  for (EdgeId e : f.cotree) {
    std::uint64_t mask = std::uint64_t{1} << e;
    VertexId a = g.edge(e).u, b = g.edge(e).v;
    while (a != b) {
      if (depth[a] < depth[b]) std::swap(a, b);
      const EdgeId pe = f.parent_edge[a];
      mask ^= std::uint64_t{1} << pe;
      a = g.other(pe, a);
    }
    basis.push_back(mask);
  }
  std::vector<std::uint64_t> space(std::size_t{1} << dim, 0);
  for (std::size_t s = 1; s < space.size(); ++s) {
    const int low = std::countr_zero(s);
    space[s] = space[s & (s - 1)] ^ basis[low];
  }
  int best = 0;
  for (std::size_t i = 0; i < space.size(); ++i) {
    for (std::size_t j = i; j < space.size(); ++j) {
      best = std::max(best, std::popcount(space[i] | space[j]));
    }
  }
  return m - best;
}

int flow_resistance_by_cotree(const MultiGraph& g, const Budget& budget) {
  const CotreeFrame f = make_frame(g);
  NodeMeter meter(budget, "flow resistance co-tree search");
  std::vector<int> value(g.num_edges(), 0);
  int best = g.num_edges() + 1;
  std::function<void(int, int)> search = [&](int i, int zeros) {
    meter.tick(best, best <= g.num_edges());
    for (VertexId v : f.close[i]) {
      const EdgeId pe = f.parent_edge[v];
      int sum = 0;
      for (EdgeId e : g.incident(v)) {
        if (e != pe) sum ^= value[e];
      }
      value[pe] = sum;
      zeros += sum == 0;
    }
    if (zeros >= best) return;
    if (i == static_cast<int>(f.cotree.size())) {
      best = zeros;
      return;
    }
    for (int x = 0; x < 4; ++x) {
      value[f.cotree[i]] = x;
      search(i + 1, zeros + (x == 0));
    }
  };
  search(0, 0);
  return best;
}

namespace {

// Groups vertices with nonzero sums into pairs and triples whose sums
// cancel, and joins each group by a path.
std::vector<Edge> cancel_sums(std::vector<std::vector<VertexId>> by_value,
                              bool klein) {
  std::vector<Edge> added;
  auto path = [&](std::vector<VertexId> group) {
    for (std::size_t i = 0; i + 1 < group.size(); ++i) {
      added.push_back({group[i], group[i + 1]});
    }
  };
  if (klein) {
    // by_value[1..3]: equal sums pair up; with odd counts one of each type
    // forms a triple.
    if (by_value[1].size() % 2 == 1) {
      path({by_value[1].back(), by_value[2].back(), by_value[3].back()});
      for (int t = 1; t <= 3; ++t) by_value[t].pop_back();
    }
    for (int t = 1; t <= 3; ++t) {
      for (std::size_t i = 0; i + 1 < by_value[t].size(); i += 2) {
        path({by_value[t][i], by_value[t][i + 1]});
      }
    }
    return added;
  }
  // Z_3: opposite sums pair up, the surplus forms triples.
  auto& ones = by_value[1];
  auto& twos = by_value[2];
  while (!ones.empty() && !twos.empty()) {
    path({ones.back(), twos.back()});
    ones.pop_back();
    twos.pop_back();
  }
  for (auto* rest : {&ones, &twos}) {
    for (std::size_t i = 0; i + 3 <= rest->size(); i += 3) {
      path({(*rest)[i], (*rest)[i + 1], (*rest)[i + 2]});
    }
  }
  return added;
}

PhiPlusResult phi_plus_klein(const CubicGraph& g, const Budget& budget) {
  rules::KleinExtensionRule rule;
  LabelDpResult r = run_label_dp(g.graph(), plan_elimination(g.graph()), rule,
                                 budget, kInfiniteCost, true, "phi_plus 4");
  std::vector<std::vector<VertexId>> by_value(4);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    int sum = 0;
    for (EdgeId e : g.incident(v)) sum ^= r.labels[e];
    if (sum != 0) by_value[sum].push_back(v);
  }
  PhiPlusResult out;
  out.added = cancel_sums(std::move(by_value), true);
  out.value = static_cast<int>(out.added.size());
  if (2 * out.value != r.cost) {
    throw Error(ErrorKind::kInvalidArgument,
                "Klein extension witness does not match its cost");
  }
  return out;
}

PhiPlusResult phi_plus_z3(const CubicGraph& g, const Budget& budget) {
  rules::Z3ExtensionRule rule;
  rule.g = &g.graph();
  LabelDpResult r = run_label_dp(g.graph(), plan_elimination(g.graph()), rule,
                                 budget, kInfiniteCost, true, "phi_plus 3");
  std::vector<std::vector<VertexId>> by_value(3);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    int net = 0;
    for (EdgeId e : g.incident(v)) net += sign_at(g, e, v) * (r.labels[e] + 1);
    net = ((net % 3) + 3) % 3;
    if (net != 0) by_value[net].push_back(v);
  }
  PhiPlusResult out;
  out.added = cancel_sums(std::move(by_value), false);
  out.value = static_cast<int>(out.added.size());
  if (6 * out.value != r.cost) {
    throw Error(ErrorKind::kInvalidArgument,
                "Z3 extension witness does not match its cost");
  }
  return out;
}

}  // namespace

std::optional<PhiPlusResult> phi_plus_by_augmentation(const MultiGraph& g,
                                                      int k, int max_added,
                                                      const Budget& budget) {
  std::vector<Edge> pairs;
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    for (VertexId v = u + 1; v < g.num_vertices(); ++v) pairs.push_back({u, v});
  }
  NodeMeter meter(budget, "phi_plus augmentation");
  std::vector<Edge> chosen;
  std::optional<PhiPlusResult> found;
  std::function<void(std::size_t, int)> search = [&](std::size_t from,
                                                     int left) {
    if (found) return;
    meter.tick();
    if (left == 0) {
      MultiGraph h = g.with_edges(chosen);
      if (has_nowhere_zero_flow(h, k, budget)) {
        found = PhiPlusResult{static_cast<int>(chosen.size()), chosen};
      }
      return;
    }
    for (std::size_t i = from; i < pairs.size() && !found; ++i) {
      chosen.push_back(pairs[i]);
      search(i, left - 1);
      chosen.pop_back();
    }
  };
  for (int t = 0; t <= max_added && !found; ++t) search(0, t);
  return found;
}

PhiPlusResult phi_plus(const CubicGraph& g, int k, const Budget& budget) {
  switch (k) {
    case 3:
      return phi_plus_z3(g, budget);
    case 4:
      return phi_plus_klein(g, budget);
    case 5: {
      // Never more than Phi+_4 edges are needed.
      const int cap = phi_plus_klein(g, budget).value;
      auto r = phi_plus_by_augmentation(g, 5, cap, budget);
      if (!r) {
        throw Error(ErrorKind::kInvalidArgument,
                    "no 5-flow augmentation within the 4-flow bound");
      }
      return *r;
    }
    default:
      throw Error(ErrorKind::kInvalidArgument,
                  fmt::format("phi_plus supports k in {{3, 4, 5}}, got {}", k));
  }
}

FlowCriticality is_4_flow_critical(const CubicGraph& g, const Budget& budget) {
  if (chromatic_index(g, nullptr, budget) == 3) {
    throw Error(ErrorKind::kNotClass2, "graph is 3-edge-colourable");
  }
  FlowCriticality out;
  // Deletion test. A divalent vertex forces equal values on its two edges,
  // so G - e has a nowhere-zero 4-flow exactly when its suppression does.
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    EdgeId removed[] = {e};
    MultiGraph h = g.graph().without_edges(removed);
    if (!has_nowhere_zero_flow(h, 4, budget)) out.failing_edges.push_back(e);
  }
  out.by_deletion = out.failing_edges.empty();

  // Characterisation: cyclically 4-edge-connected, and every edge joins the
  // two odd circuits of a 2-factor with exactly two odd circuits.
  out.cyclic_connectivity = cyclic_edge_connectivity(g);
  out.certificates.assign(g.num_edges(), {});
  int certified = 0;
  for_each_perfect_matching(
      g.graph(),
      [&](const PerfectMatching& pm) {
        EvenFactor f = describe_factor(g, complement_edges(g, pm));
        if (f.odd_count() != 2) return true;
        std::vector<int> odd_component(g.num_vertices(), -1);
        for (std::size_t c = 0; c < f.components.size(); ++c) {
          if (!f.components[c].odd()) continue;
          for (VertexId v : f.components[c].vertices) odd_component[v] = c;
        }
        for (EdgeId e : pm) {
          const int a = odd_component[g.edge(e).u];
          const int b = odd_component[g.edge(e).v];
          if (a >= 0 && b >= 0 && a != b && out.certificates[e].empty()) {
            out.certificates[e] = pm;
            ++certified;
          }
        }
        return certified < g.num_edges();
      },
      budget);
  out.by_characterization = (out.cyclic_connectivity == kNoCyclicCut ||
                             out.cyclic_connectivity >= 4) &&
                            certified == g.num_edges();
  if (out.by_deletion != out.by_characterization) {
    throw Error(ErrorKind::kInvalidArgument,
                "4-flow-criticality tests disagree");
  }
  out.critical = out.by_deletion;
  return out;
}

}  // namespace snark
