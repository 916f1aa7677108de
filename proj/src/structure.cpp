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

#include "snark/structure.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/push_relabel_max_flow.hpp>

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <numeric>
#include <set>
#include <vector>

#include <fmt/format.h>

#include "snark/cycle_factor.hpp"

namespace snark {

const char* hamiltonicity_name(Hamiltonicity h) {
  switch (h) {
    case Hamiltonicity::kHamiltonian:
      return "hamiltonian";
    case Hamiltonicity::kHypohamiltonian:
      return "hypohamiltonian";
    case Hamiltonicity::kNeither:
      return "neither";
  }
  return "unknown";
}

int connected_components(const MultiGraph& g, std::vector<int>* component) {
  const int n = g.num_vertices();
  std::vector<int> label(n, -1);
  int count = 0;
  std::vector<VertexId> stack;
  for (int s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    label[s] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (EdgeId e : g.incident(v)) {
        VertexId w = g.other(e, v);
        if (label[w] < 0) {
          label[w] = count;
          stack.push_back(w);
        }
      }
    }
    ++count;
  }
  if (component != nullptr) *component = std::move(label);
  return count;
}

std::vector<char> reachable(const MultiGraph& g, VertexId start,
                            const std::vector<char>& blocked) {
  std::vector<char> seen(g.num_vertices(), 0);
  std::vector<VertexId> stack{start};
  seen[start] = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (EdgeId e : g.incident(v)) {
      if (!blocked.empty() && blocked[e]) continue;
      VertexId w = g.other(e, v);
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

std::vector<EdgeId> bridges(const MultiGraph& g) {
  const int n = g.num_vertices();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<EdgeId> found;
  int timer = 0;
  // Iterative DFS; frames hold (vertex, parent edge, next incident index).
  struct Frame {
    VertexId v;
    EdgeId parent_edge;
    std::size_t next;
  };
  for (int root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    std::vector<Frame> stack{{root, -1, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto inc = g.incident(f.v);
      if (f.next < inc.size()) {
        EdgeId e = inc[f.next++];
        if (e == f.parent_edge) continue;
        VertexId w = g.other(e, f.v);
        if (disc[w] < 0) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, e, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          VertexId u = stack.back().v;
          low[u] = std::min(low[u], low[done.v]);
          if (low[done.v] > disc[u]) found.push_back(done.parent_edge);
        }
      }
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

int girth(const MultiGraph& g) {
  const int n = g.num_vertices();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(n), via(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    via[s] = -1;
    std::deque<VertexId> queue{s};
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      if (2 * dist[v] + 1 >= best) break;
      for (EdgeId e : g.incident(v)) {
        if (e == via[v]) continue;
        VertexId w = g.other(e, v);
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          via[w] = e;
          queue.push_back(w);
        } else {
          best = std::min(best, dist[v] + dist[w] + 1);
        }
      }
    }
  }
  return best == std::numeric_limits<int>::max() ? kInfiniteGirth : best;
}

bool is_bipartite(const MultiGraph& g) {
  const int n = g.num_vertices();
  std::vector<int> side(n, -1);
  std::vector<VertexId> stack;
  for (int s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (EdgeId e : g.incident(v)) {
        VertexId w = g.other(e, v);
        if (side[w] < 0) {
          side[w] = side[v] ^ 1;
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<std::pair<EdgeId, EdgeId>> two_edge_cuts(const MultiGraph& g) {
  std::vector<std::pair<EdgeId, EdgeId>> cuts;
  if (g.num_vertices() == 0) return cuts;
  std::vector<char> is_bridge(g.num_edges(), 0);
  for (EdgeId b : bridges(g)) is_bridge[b] = 1;
  std::vector<char> blocked(g.num_edges(), 0);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (is_bridge[e]) continue;
    for (EdgeId f = e + 1; f < g.num_edges(); ++f) {
      if (is_bridge[f]) continue;
      blocked[e] = blocked[f] = 1;
      std::vector<char> seen = reachable(g, g.edge(e).u, blocked);
      if (!seen[g.edge(e).v]) cuts.emplace_back(e, f);
      blocked[e] = blocked[f] = 0;
    }
  }
  return cuts;
}

namespace {

using FlowTraits =
    boost::adjacency_list_traits<boost::vecS, boost::vecS, boost::directedS>;
using FlowGraph = boost::adjacency_list<
    boost::vecS, boost::vecS, boost::directedS, boost::no_property,
    boost::property<
        boost::edge_capacity_t, long,
        boost::property<boost::edge_residual_capacity_t, long,
                        boost::property<boost::edge_reverse_t,
                                        FlowTraits::edge_descriptor>>>>;

// Minimum number of edges separating vertex set `s` from vertex set `t`
// (disjoint). Cut edges are written to `cut` when non-null.
int min_separating_cut(const MultiGraph& g, const std::vector<char>& in_s,
                       const std::vector<char>& in_t,
                       std::vector<EdgeId>* cut) {
  const int n = g.num_vertices();
  // Node 0 is the contracted source, node 1 the contracted sink.
  std::vector<int> node(n);
  int count = 2;
  for (int v = 0; v < n; ++v) {
    node[v] = in_s[v] ? 0 : in_t[v] ? 1 : count++;
  }
  FlowGraph flow(count);
  auto capacity = boost::get(boost::edge_capacity, flow);
  auto reverse = boost::get(boost::edge_reverse, flow);
  auto residual = boost::get(boost::edge_residual_capacity, flow);
  auto add_arc = [&](int a, int b) {
    auto forward = boost::add_edge(a, b, flow).first;
    auto back = boost::add_edge(b, a, flow).first;
    capacity[forward] = 1;
    capacity[back] = 0;
    reverse[forward] = back;
    reverse[back] = forward;
  };
  for (const Edge& e : g.edges()) {
    int a = node[e.u];
    int b = node[e.v];
    if (a == b) continue;
    add_arc(a, b);
    add_arc(b, a);
  }
  long value = boost::push_relabel_max_flow(flow, 0, 1);
  if (cut != nullptr) {
    std::vector<char> side(count, 0);
    std::vector<int> stack{0};
    side[0] = 1;
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      for (auto [it, end] = boost::out_edges(a, flow); it != end; ++it) {
        int b = static_cast<int>(boost::target(*it, flow));
        if (!side[b] && residual[*it] > 0) {
          side[b] = 1;
          stack.push_back(b);
        }
      }
    }
    cut->clear();
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      if (side[node[g.edge(e).u]] != side[node[g.edge(e).v]]) {
        cut->push_back(e);
      }
    }
  }
  return static_cast<int>(value);
}

// Vertex set of a shortest cycle through edge e, or empty if e is a bridge.
std::vector<VertexId> shortest_cycle_through(const MultiGraph& g, EdgeId e) {
  const Edge& ed = g.edge(e);
  std::vector<int> via(g.num_vertices(), -2);
  via[ed.u] = -1;
  std::deque<VertexId> queue{ed.u};
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    if (v == ed.v) break;
    for (EdgeId f : g.incident(v)) {
      if (f == e) continue;
      VertexId w = g.other(f, v);
      if (via[w] == -2) {
        via[w] = f;
        queue.push_back(w);
      }
    }
  }
  if (via[ed.v] == -2) return {};
  std::vector<VertexId> cycle;
  for (VertexId v = ed.v; v != ed.u; v = g.other(via[v], v)) cycle.push_back(v);
  cycle.push_back(ed.u);
  std::sort(cycle.begin(), cycle.end());
  return cycle;
}

// Vertex sets of all cycles with at most `max_len` vertices.
void short_cycles(const MultiGraph& g, int max_len,
                  std::set<std::vector<VertexId>>* out) {
  const int n = g.num_vertices();
  std::vector<char> on_path(n, 0);
  std::vector<VertexId> path;
  std::vector<EdgeId> path_edges;
  // Cycles are rooted at their smallest vertex.
  std::function<void(VertexId, VertexId)> extend = [&](VertexId root,
                                                       VertexId v) {
    for (EdgeId e : g.incident(v)) {
      if (!path_edges.empty() && e == path_edges.back()) continue;
      VertexId w = g.other(e, v);
      if (w == root && path.size() >= 2) {
        std::vector<VertexId> cycle = path;
        std::sort(cycle.begin(), cycle.end());
        out->insert(cycle);
        continue;
      }
      if (w < root || on_path[w]) continue;
      if (static_cast<int>(path.size()) >= max_len) continue;
      on_path[w] = 1;
      path.push_back(w);
      path_edges.push_back(e);
      extend(root, w);
      path.pop_back();
      path_edges.pop_back();
      on_path[w] = 0;
    }
  };
  for (VertexId root = 0; root < n; ++root) {
    on_path[root] = 1;
    path.assign(1, root);
    extend(root, root);
    on_path[root] = 0;
  }
}

}  // namespace

int cyclic_edge_connectivity(const MultiGraph& g,
                             std::vector<EdgeId>* witness) {
  std::set<std::vector<VertexId>> seeds;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    std::vector<VertexId> c = shortest_cycle_through(g, e);
    if (!c.empty()) seeds.insert(std::move(c));
  }
  int gth = girth(g);
  if (gth == kInfiniteGirth) return kNoCyclicCut;
  short_cycles(g, gth + 2, &seeds);

  std::vector<std::vector<VertexId>> list(seeds.begin(), seeds.end());
  const int n = g.num_vertices();
  std::vector<std::vector<char>> member(list.size(), std::vector<char>(n, 0));
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (VertexId v : list[i]) member[i][v] = 1;
  }
  int best = kNoCyclicCut;
  std::vector<EdgeId> cut;
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::size_t j = i + 1; j < list.size(); ++j) {
      bool disjoint = std::none_of(list[j].begin(), list[j].end(),
                                   [&](VertexId v) { return member[i][v]; });
      if (!disjoint) continue;
      int value = min_separating_cut(g, member[i], member[j],
                                     witness != nullptr ? &cut : nullptr);
      if (best == kNoCyclicCut || value < best) {
        best = value;
        if (witness != nullptr) *witness = cut;
      }
    }
  }
  return best;
}

int cyclic_edge_connectivity_brute_force(const MultiGraph& g) {
  const int n = g.num_vertices();
  if (n > 24) {
    throw Error(ErrorKind::kInvalidArgument,
                "brute-force cyclic connectivity limited to 24 vertices");
  }
  // A vertex set induces a cycle iff it does not induce a forest.
  auto has_cycle = [&](std::uint32_t set) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
      return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (const Edge& e : g.edges()) {
      if (!((set >> e.u) & 1) || !((set >> e.v) & 1)) continue;
      int a = find(e.u), b = find(e.v);
      if (a == b) return true;
      parent[a] = b;
    }
    return false;
  };
  int best = kNoCyclicCut;
  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  // Vertex 0 always on the first side.
  for (std::uint32_t set = 1; set < full; set += 2) {
    int size = 0;
    for (const Edge& e : g.edges()) {
      if (((set >> e.u) & 1) != ((set >> e.v) & 1)) ++size;
    }
    if (best != kNoCyclicCut && size >= best) continue;
    if (has_cycle(set) && has_cycle(full & ~set)) best = size;
  }
  return best;
}

std::optional<std::vector<EdgeId>> hamilton_circuit(const MultiGraph& g,
                                                    const Budget& budget) {
  if (g.num_vertices() < 2 || !g.is_connected()) return std::nullopt;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) < 2) return std::nullopt;
  }
  CycleFactorOptions options;
  options.mode = FactorMode::kHamiltonian;
  CycleFactorResult r = min_odd_factor(g, options, budget);
  if (!r.feasible) return std::nullopt;
  return r.edges;
}

bool has_hamilton_circuit_dfs(const MultiGraph& g) {
  const int n = g.num_vertices();
  if (n < 2) return false;
  if (n == 2) {
    return g.num_edges() >= 2;  // a parallel pair is a 2-circuit
  }
  std::vector<char> used(n, 0);
  std::function<bool(VertexId, int)> walk = [&](VertexId v, int depth) {
    if (depth == n) {
      for (EdgeId e : g.incident(v)) {
        if (g.other(e, v) == 0) return true;
      }
      return false;
    }
    for (EdgeId e : g.incident(v)) {
      VertexId w = g.other(e, v);
      if (used[w]) continue;
      used[w] = 1;
      if (walk(w, depth + 1)) return true;
      used[w] = 0;
    }
    return false;
  };
  used[0] = 1;
  return walk(0, 1);
}

Hamiltonicity hamiltonicity(const MultiGraph& g, const Budget& budget) {
  if (hamilton_circuit(g, budget)) return Hamiltonicity::kHamiltonian;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    VertexId removed[] = {v};
    if (!hamilton_circuit(g.without_vertices(removed), budget)) {
      return Hamiltonicity::kNeither;
    }
  }
  return Hamiltonicity::kHypohamiltonian;
}

StructureProfile structure_profile(const CubicGraph& cubic,
                                   const Budget& budget) {
  const MultiGraph& g = cubic.graph();
  if (!g.is_connected()) {
    throw Error(ErrorKind::kDisconnected,
                "structure profile needs a "
                "connected graph");
  }
  StructureProfile p;
  p.bridges = bridges(g);
  p.girth = girth(g);
  p.two_edge_cuts = two_edge_cuts(g);
  p.cyclic_edge_connectivity = cyclic_edge_connectivity(g);
  p.hamiltonicity = hamiltonicity(g, budget);
  return p;
}

CubicGraph suppress_divalent(const MultiGraph& g) {
  const int n = g.num_vertices();
  for (VertexId v = 0; v < n; ++v) {
    if (g.degree(v) != 2 && g.degree(v) != 3) {
      throw Error(ErrorKind::kNotSubcubic,
                  fmt::format("vertex {} has degree {}", v, g.degree(v)));
    }
  }
  std::vector<Edge> edges = g.edges();
  std::vector<char> alive(edges.size(), 1);
  std::vector<std::vector<EdgeId>> inc(n);
  for (EdgeId e = 0; e < static_cast<EdgeId>(edges.size()); ++e) {
    inc[edges[e].u].push_back(e);
    inc[edges[e].v].push_back(e);
  }
  std::vector<char> removed(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    if (g.degree(v) != 2) continue;
    EdgeId e1 = inc[v][0], e2 = inc[v][1];
    VertexId a = edges[e1].u == v ? edges[e1].v : edges[e1].u;
    VertexId b = edges[e2].u == v ? edges[e2].v : edges[e2].u;
    if (a == b || e1 == e2) {
      throw Error(ErrorKind::kLoopCreated,
                  fmt::format("suppressing vertex {} creates a loop", v));
    }
    // Keep the smaller edge id for the merged edge.
    EdgeId keep = std::min(e1, e2), drop = std::max(e1, e2);
    VertexId far_drop = keep == e1 ? b : a;
    edges[keep] = {keep == e1 ? a : b, far_drop};
    alive[drop] = 0;
    std::replace(inc[far_drop].begin(), inc[far_drop].end(), drop, keep);
    removed[v] = 1;
    inc[v].clear();
  }
  std::vector<int> index(n, -1);
  int count = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (!removed[v]) index[v] = count++;
  }
  std::vector<Edge> out;
  for (EdgeId e = 0; e < static_cast<EdgeId>(edges.size()); ++e) {
    if (alive[e]) out.push_back({index[edges[e].u], index[edges[e].v]});
  }
  return as_cubic(MultiGraph(count, std::move(out)));
}

}  // namespace snark
