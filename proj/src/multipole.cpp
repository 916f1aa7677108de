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

#include "snark/multipole.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include <fmt/format.h>

#include "snark/constructions.hpp"
#include "snark/klein.hpp"
#include "snark/structure.hpp"

namespace snark {

Multipole::Multipole(int num_vertices, std::vector<Edge> edges,
                     std::vector<Semiedge> semiedges)
    : num_vertices_(num_vertices),
      edges_(std::move(edges)),
      semiedges_(std::move(semiedges)) {
  auto fail = [](const std::string& what) {
    throw Error(ErrorKind::kInvalidArgument, "multipole: " + what);
  };
  if (num_vertices_ < 0) fail("negative vertex count");
  std::vector<int> deg(num_vertices_, 0);
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.u >= num_vertices_ || e.v < 0 || e.v >= num_vertices_) {
      fail(fmt::format("edge {}-{} out of range", e.u, e.v));
    }
    if (e.u == e.v) fail(fmt::format("loop at vertex {}", e.u));
    ++deg[e.u];
    ++deg[e.v];
  }
  const int s = arity();
  for (int i = 0; i < s; ++i) {
    const Semiedge& x = semiedges_[i];
    if (x.vertex >= 0) {
      if (x.vertex >= num_vertices_ || x.partner != -1) {
        fail(fmt::format("semiedge {} is malformed", i));
      }
      ++deg[x.vertex];
    } else if (x.partner < 0 || x.partner >= s || x.partner == i ||
               semiedges_[x.partner].partner != i ||
               semiedges_[x.partner].vertex != -1) {
      fail(fmt::format("semiedge {} has no valid partner", i));
    }
  }
  for (VertexId v = 0; v < num_vertices_; ++v) {
    if (deg[v] != 3) fail(fmt::format("vertex {} has degree {}", v, deg[v]));
  }
}

Multipole parse_multipole(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    lines.push_back(line);
  }
  auto fail = [](const std::string& what) -> Multipole {
    throw Error(ErrorKind::kInvalidArgument, "multipole text: " + what);
  };
  if (lines.empty()) return fail("missing header");
  std::istringstream header(lines[0]);
  int n = -1, m = -1, s = -1;
  if (!(header >> n >> m >> s) || n < 0 || m < 0 || s < 0) {
    return fail("bad header");
  }
  if (static_cast<int>(lines.size()) != 1 + m + s) {
    return fail(
        fmt::format("expected {} lines, got {}", 1 + m + s, lines.size()));
  }
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    std::istringstream row(lines[1 + i]);
    Edge e{};
    if (!(row >> e.u >> e.v)) return fail("bad edge line");
    edges.push_back(e);
  }
  std::vector<Semiedge> semiedges;
  for (int i = 0; i < s; ++i) {
    std::istringstream row(lines[1 + m + i]);
    std::string kind;
    int value = 0;
    if (!(row >> kind >> value)) return fail("bad semiedge line");
    if (kind == "v") {
      semiedges.push_back({value, -1});
    } else if (kind == "p") {
      semiedges.push_back({-1, value});
    } else {
      return fail("semiedge kind must be 'v' or 'p'");
    }
  }
  return Multipole(n, std::move(edges), std::move(semiedges));
}

std::string write_multipole(const Multipole& m) {
  std::string out =
      fmt::format("{} {} {}\n", m.num_vertices(), m.edges().size(), m.arity());
  for (const Edge& e : m.edges()) out += fmt::format("{} {}\n", e.u, e.v);
  for (const Semiedge& s : m.semiedges()) {
    if (s.vertex >= 0) {
      out += fmt::format("v {}\n", s.vertex);
    } else {
      out += fmt::format("p {}\n", s.partner);
    }
  }
  return out;
}

bool ColSet::contains(const ColTuple& t) const {
  return std::binary_search(tuples.begin(), tuples.end(), t);
}

ColSet tait_colorings(const Multipole& m, const Budget& budget) {
  // Items: internal edges, attached semiedges, and isolated edges (one item
  // for both halves). Each vertex lists the items at it.
  const int n = m.num_vertices();
  const int ne = static_cast<int>(m.edges().size());
  std::vector<std::vector<int>> at(n);
  std::vector<std::vector<int>> slots;  // semiedge indices coloured by item
  for (int i = 0; i < ne; ++i) {
    at[m.edges()[i].u].push_back(i);
    at[m.edges()[i].v].push_back(i);
    slots.emplace_back();
  }
  for (int s = 0; s < m.arity(); ++s) {
    const Semiedge& x = m.semiedges()[s];
    if (x.vertex >= 0) {
      at[x.vertex].push_back(static_cast<int>(slots.size()));
      slots.push_back({s});
    } else if (x.partner > s) {
      slots.push_back({s, x.partner});
    }
  }
  const int items = static_cast<int>(slots.size());
  std::vector<std::vector<int>> ends(items);
  for (VertexId v = 0; v < n; ++v) {
    for (int it : at[v]) ends[it].push_back(v);
  }
  // Order items vertex by vertex so conflicts surface early.
  std::vector<int> order;
  std::vector<char> placed(items, 0);
  for (VertexId v = 0; v < n; ++v) {
    for (int it : at[v]) {
      if (!placed[it]) {
        placed[it] = 1;
        order.push_back(it);
      }
    }
  }
  for (int it = 0; it < items; ++it) {
    if (!placed[it]) order.push_back(it);
  }

  NodeMeter meter(budget, "multipole colourings");
  std::vector<int> color(items, 0);
  std::vector<ColTuple> found;
  ColTuple tuple(m.arity(), 0);
  std::function<void(int)> search = [&](int depth) {
    meter.tick();
    if (depth == items) {
      for (int it = 0; it < items; ++it) {
        for (int s : slots[it]) tuple[s] = static_cast<std::uint8_t>(color[it]);
      }
      found.push_back(tuple);
      return;
    }
    const int it = order[depth];
    for (int c = 1; c <= 3; ++c) {
      bool ok = true;
      for (VertexId v : ends[it]) {
        for (int other : at[v]) {
          if (other != it && color[other] == c) ok = false;
        }
      }
      if (!ok) continue;
      color[it] = c;
      search(depth + 1);
      color[it] = 0;
    }
  };
  search(0);
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return ColSet{m.arity(), std::move(found)};
}

bool parity_check(int m1, int m2, int m3, int m) {
  auto par = [](int x) { return ((x % 2) + 2) % 2; };
  return par(m1) == par(m) && par(m2) == par(m) && par(m3) == par(m);
}

ColSet parity_feasible_tuples(int arity) {
  ColSet out;
  out.arity = arity;
  ColTuple t(arity, 1);
  std::function<void(int)> fill = [&](int i) {
    if (i == arity) {
      int count[4] = {0, 0, 0, 0};
      for (std::uint8_t c : t) ++count[c];
      if (parity_check(count[1], count[2], count[3], arity)) {
        out.tuples.push_back(t);
      }
      return;
    }
    for (std::uint8_t c = 1; c <= 3; ++c) {
      t[i] = c;
      fill(i + 1);
    }
  };
  fill(0);
  return out;
}

bool is_color_complete(const Multipole& m, const Budget& budget) {
  return tait_colorings(m, budget) == parity_feasible_tuples(m.arity());
}

bool is_subset(const ColSet& a, const ColSet& b) {
  return a.arity == b.arity && std::includes(b.tuples.begin(), b.tuples.end(),
                                             a.tuples.begin(), a.tuples.end());
}

bool are_color_disjoint(const Multipole& a, const Multipole& b,
                        const Budget& budget) {
  if (a.arity() != b.arity()) {
    throw Error(ErrorKind::kArityMismatch,
                fmt::format("arities {} and {} differ", a.arity(), b.arity()));
  }
  ColSet ca = tait_colorings(a, budget);
  ColSet cb = tait_colorings(b, budget);
  std::vector<ColTuple> common;
  std::set_intersection(ca.tuples.begin(), ca.tuples.end(), cb.tuples.begin(),
                        cb.tuples.end(), std::back_inserter(common));
  return common.empty();
}

ColSet permute(const ColSet& s, const std::vector<int>& order) {
  ColSet out;
  out.arity = s.arity;
  for (const ColTuple& t : s.tuples) {
    ColTuple p(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) p[i] = t[order[i]];
    out.tuples.push_back(std::move(p));
  }
  std::sort(out.tuples.begin(), out.tuples.end());
  return out;
}

namespace {

// Semiedge list reordered so position i holds old semiedge order[i].
Multipole reorder_semiedges(const Multipole& m, const std::vector<int>& order) {
  std::vector<int> where(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) where[order[i]] = i;
  std::vector<Semiedge> out;
  for (int old : order) {
    Semiedge s = m.semiedges()[old];
    if (s.partner >= 0) s.partner = where[s.partner];
    out.push_back(s);
  }
  return Multipole(m.num_vertices(), m.edges(), std::move(out));
}

}  // namespace

Multipole join(const Multipole& a, const Multipole& b,
               const std::vector<std::pair<int, int>>& pairing) {
  const int sa = a.arity();
  const int total = sa + b.arity();
  const int offset = a.num_vertices();
  // Combined semiedge nodes: a's, then b's shifted by sa.
  std::vector<VertexId> vertex(total, -1);
  std::vector<int> partner(total, -1), paired(total, -1);
  for (int i = 0; i < sa; ++i) {
    vertex[i] = a.semiedges()[i].vertex;
    partner[i] = a.semiedges()[i].partner;
  }
  for (int i = 0; i < b.arity(); ++i) {
    const Semiedge& s = b.semiedges()[i];
    vertex[sa + i] = s.vertex >= 0 ? s.vertex + offset : -1;
    partner[sa + i] = s.partner >= 0 ? s.partner + sa : -1;
  }
  for (auto [x, y] : pairing) {
    if (x < 0 || x >= sa || y < 0 || y >= b.arity() || paired[x] >= 0 ||
        paired[sa + y] >= 0) {
      throw Error(ErrorKind::kInvalidPairing,
                  fmt::format("bad pair ({}, {})", x, y));
    }
    paired[x] = sa + y;
    paired[sa + y] = x;
  }
  // Partner and pair links form paths. A node with at most one link ends
  // its path: an attached node on the vertex side, an unpaired isolated
  // half as a free semiedge. A lone attached unpaired node is a semiedge
  // that stays as it is.
  std::vector<Edge> edges(a.edges());
  for (const Edge& e : b.edges()) edges.push_back({e.u + offset, e.v + offset});
  std::vector<char> seen(total, 0);
  struct Chain {
    int free_a = -1;  // free node index, or -1
    int free_b = -1;
    VertexId va = -1;  // anchoring vertex, or -1
    VertexId vb = -1;
  };
  std::vector<Chain> chains;
  auto links = [&](int x) { return (partner[x] >= 0) + (paired[x] >= 0); };
  for (int start = 0; start < total; ++start) {
    if (seen[start] || links(start) > 1) continue;
    seen[start] = 1;
    Chain c;
    if (links(start) == 0) {
      c.free_a = start;
      c.va = vertex[start];
      chains.push_back(c);
      continue;
    }
    bool via_pair = paired[start] >= 0;
    int cur = start;
    while (true) {
      int next = via_pair ? paired[cur] : partner[cur];
      if (next < 0) break;
      cur = next;
      seen[cur] = 1;
      via_pair = !via_pair;
    }
    for (auto [node, free_slot, vertex_slot] :
         {std::tuple{start, &c.free_a, &c.va},
          std::tuple{cur, &c.free_b, &c.vb}}) {
      if (paired[node] < 0) {
        *free_slot = node;
      } else {
        *vertex_slot = vertex[node];
      }
    }
    chains.push_back(c);
  }
  for (int x = 0; x < total; ++x) {
    if (!seen[x]) {
      throw Error(ErrorKind::kInvalidPairing,
                  "pairing closes a circuit without vertices");
    }
  }
  // Collect the new semiedges in order of their node index.
  std::vector<std::pair<int, Semiedge>> free_nodes;
  for (const Chain& c : chains) {
    if (c.free_a < 0 && c.free_b < 0) {
      edges.push_back({c.va, c.vb});
    } else if (c.free_a >= 0 && c.free_b < 0 && c.vb < 0) {
      // Lone attached semiedge.
      free_nodes.push_back({c.free_a, {c.va, -1}});
    } else if (c.free_a >= 0 && c.free_b >= 0) {
      free_nodes.push_back({c.free_a, {-1, c.free_b}});
      free_nodes.push_back({c.free_b, {-1, c.free_a}});
    } else if (c.free_a >= 0) {
      free_nodes.push_back({c.free_a, {c.vb, -1}});
    } else {
      free_nodes.push_back({c.free_b, {c.va, -1}});
    }
  }
  std::sort(free_nodes.begin(), free_nodes.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<int> new_index(total, -1);
  for (std::size_t i = 0; i < free_nodes.size(); ++i) {
    new_index[free_nodes[i].first] = static_cast<int>(i);
  }
  std::vector<Semiedge> semiedges;
  for (auto& [node, s] : free_nodes) {
    if (s.partner >= 0) s.partner = new_index[s.partner];
    semiedges.push_back(s);
  }
  for (const Edge& e : edges) {
    if (e.u == e.v) {
      throw Error(ErrorKind::kInvalidPairing,
                  fmt::format("pairing creates a loop at vertex {}", e.u));
    }
  }
  return Multipole(offset + b.num_vertices(), std::move(edges),
                   std::move(semiedges));
}

MultiGraph join_to_graph(const Multipole& a, const Multipole& b,
                         const std::vector<std::pair<int, int>>& pairing) {
  Multipole j = join(a, b, pairing);
  if (j.arity() != 0) {
    throw Error(ErrorKind::kInvalidPairing,
                fmt::format("{} semiedges left unpaired", j.arity()));
  }
  return MultiGraph(j.num_vertices(), j.edges());
}

SplitResult split(const MultiGraph& g, const std::vector<EdgeId>& cut) {
  if (cut.empty()) throw Error(ErrorKind::kNotACut, "empty edge set");
  std::vector<char> blocked(g.num_edges(), 0);
  for (EdgeId e : cut) {
    if (e < 0 || e >= g.num_edges() || blocked[e]) {
      throw Error(ErrorKind::kNotACut, fmt::format("bad cut edge {}", e));
    }
    blocked[e] = 1;
  }
  std::vector<char> side = reachable(g, g.edge(cut[0]).u, blocked);
  const int n = g.num_vertices();
  for (EdgeId e : cut) {
    if (side[g.edge(e).u] == side[g.edge(e).v]) {
      throw Error(ErrorKind::kNotACut,
                  fmt::format("edge {} does not cross the cut", e));
    }
  }
  SplitResult out;
  std::vector<int> index(n, -1);
  for (VertexId v = 0; v < n; ++v) {
    auto& list = side[v] ? out.first_vertices : out.second_vertices;
    index[v] = static_cast<int>(list.size());
    list.push_back(v);
  }
  std::vector<Edge> first_edges, second_edges;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (blocked[e]) continue;
    const Edge& ed = g.edge(e);
    (side[ed.u] ? first_edges : second_edges)
        .push_back({index[ed.u], index[ed.v]});
  }
  std::vector<Semiedge> first_semi, second_semi;
  for (EdgeId e : cut) {
    VertexId a = g.edge(e).u, b = g.edge(e).v;
    if (!side[a]) std::swap(a, b);
    first_semi.push_back({index[a], -1});
    second_semi.push_back({index[b], -1});
  }
  const int n1 = static_cast<int>(out.first_vertices.size());
  out.first = Multipole(n1, std::move(first_edges), std::move(first_semi));
  out.second =
      Multipole(n - n1, std::move(second_edges), std::move(second_semi));
  return out;
}

std::vector<std::pair<int, int>> identity_pairing(int arity) {
  std::vector<std::pair<int, int>> p;
  for (int i = 0; i < arity; ++i) p.emplace_back(i, i);
  return p;
}

bool boole_parity_check(const ConflictWitness& witness) {
  int count[4] = {0, 0, 0, 0};
  for (BooleColor b : witness.types) ++count[index_of(b)];
  return count[1] % 2 == count[2] % 2 && count[2] % 2 == count[3] % 2;
}

Multipole not_gate_fragment() {
  const CubicGraph p = petersen();
  const VertexId path[3] = {7, 0, 8};
  std::vector<VertexId> kept;
  MultiGraph rest = p.graph().without_vertices(path, &kept);
  std::vector<int> index(p.num_vertices(), -1);
  for (std::size_t i = 0; i < kept.size(); ++i) index[kept[i]] = i;
  std::vector<Semiedge> semiedges;
  for (VertexId r : path) {
    std::vector<VertexId> outside;
    for (EdgeId e : p.incident(r)) {
      VertexId w = p.other(e, r);
      if (index[w] >= 0) outside.push_back(w);
    }
    std::sort(outside.begin(), outside.end());
    for (VertexId w : outside) semiedges.push_back({index[w], -1});
  }
  return Multipole(rest.num_vertices(), rest.edges(), std::move(semiedges));
}

namespace {

NotGateCheck check_not_gate_set(const ColSet& colorings) {
  NotGateCheck out;
  for (const ColTuple& t : colorings.tuples) {
    bool x1_zero = t[0] == t[1];
    bool x2_zero = t[2] == t[3];
    if (x1_zero == x2_zero) {
      out.ok = false;
      out.counterexample = t;
      return out;
    }
  }
  return out;
}

// The grouping passes checks found by not_gate_groupings on the fragment.
constexpr Grouping kNotGateGrouping{{0, 1}, {3, 4}, 2};

}  // namespace

std::vector<Grouping> not_gate_groupings(const Multipole& fragment) {
  if (fragment.arity() != 5) {
    throw Error(ErrorKind::kArityMismatch, "a NOT gate has 5 semiedges");
  }
  const ColSet base = tait_colorings(fragment);
  std::vector<Grouping> out;
  for (int e = 0; e < 5; ++e) {
    std::vector<int> rest;
    for (int i = 0; i < 5; ++i) {
      if (i != e) rest.push_back(i);
    }
    // rest[0] pairs with one of the other three.
    for (int j = 1; j < 4; ++j) {
      std::array<int, 2> x1{rest[0], rest[j]};
      std::array<int, 2> x2{};
      int k = 0;
      for (int i = 1; i < 4; ++i) {
        if (i != j) x2[k++] = rest[i];
      }
      std::vector<int> order{x1[0], x1[1], x2[0], x2[1], e};
      if (check_not_gate_set(permute(base, order)).ok && !base.empty()) {
        out.push_back({x1, x2, e});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Grouping& a, const Grouping& b) {
    return std::tie(a.e, a.x1, a.x2) < std::tie(b.e, b.x1, b.x2);
  });
  return out;
}

Multipole not_gate() {
  const Grouping& g = kNotGateGrouping;
  return reorder_semiedges(not_gate_fragment(),
                           {g.x1[0], g.x1[1], g.x2[0], g.x2[1], g.e});
}

NotGateCheck check_not_gate(const Multipole& m, const Budget& budget) {
  if (m.arity() != 5) {
    throw Error(ErrorKind::kArityMismatch, "a NOT gate has 5 semiedges");
  }
  return check_not_gate_set(tait_colorings(m, budget));
}

CubicGraph loupekhine(int k) {
  if (k < 3 || k % 2 == 0) {
    throw Error(ErrorKind::kEvenK,
                fmt::format("Loupekhine ring needs odd k >= 3, got {}", k));
  }
  const Multipole gate = not_gate();
  const int size = gate.num_vertices();
  auto vertex_of = [&](int copy, int semiedge) {
    return copy * size + gate.semiedges()[semiedge].vertex;
  };
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) {
    for (const Edge& e : gate.edges()) {
      edges.push_back({e.u + i * size, e.v + i * size});
    }
  }
  for (int i = 0; i < k; ++i) {
    const int j = (i + 1) % k;
    edges.push_back({vertex_of(i, 2), vertex_of(j, 0)});
    edges.push_back({vertex_of(i, 3), vertex_of(j, 1)});
  }
  // Connector path c_0 .. c_{k-3}: the ends take two e semiedges, inner
  // vertices one, assigned in gate order.
  const int base = k * size;
  const int connectors = k - 2;
  std::vector<int> free(connectors, 1);
  free.front() = free.back() = 2;
  if (connectors == 1) free[0] = 3;
  for (int c = 0; c + 1 < connectors; ++c) {
    edges.push_back({base + c, base + c + 1});
  }
  int gate_index = 0;
  for (int c = 0; c < connectors; ++c) {
    for (int t = 0; t < free[c]; ++t) {
      edges.push_back({vertex_of(gate_index++, 4), base + c});
    }
  }
  return as_cubic(MultiGraph(base + connectors, std::move(edges)));
}

namespace {

// All multipole structures with k vertices and `arity` semiedges: `attached`
// semiedges spread over the vertices (nondecreasing per vertex), the rest
// isolated edges, and every loopless edge multiset completing the degrees.
void enumerate_structures(int k, int arity,
                          const std::function<void(const Multipole&)>& visit,
                          NodeMeter& meter) {
  for (int isolated = 0; 2 * isolated <= arity; ++isolated) {
    const int attached = arity - 2 * isolated;
    if (attached > 3 * k || (3 * k - attached) % 2 != 0) continue;
    if (k == 0 && attached != 0) continue;
    std::vector<int> semi(k, 0);
    std::function<void(int, int)> spread = [&](int v, int left) {
      if (v == k) {
        if (left != 0) return;
        std::vector<int> need(k);
        for (int i = 0; i < k; ++i) need[i] = 3 - semi[i];
        std::vector<Edge> edges;
        std::function<void(int)> pair_up = [&](int from) {
          meter.tick();
          int v0 = from;
          while (v0 < k && need[v0] == 0) ++v0;
          if (v0 == k) {
            std::vector<Semiedge> semiedges;
            for (int i = 0; i < k; ++i) {
              for (int t = 0; t < semi[i]; ++t) semiedges.push_back({i, -1});
            }
            for (int t = 0; t < isolated; ++t) {
              int s = static_cast<int>(semiedges.size());
              semiedges.push_back({-1, s + 1});
              semiedges.push_back({-1, s});
            }
            visit(Multipole(k, edges, std::move(semiedges)));
            return;
          }
          // Neighbours of v0 in nondecreasing order avoid repeats.
          int min_w = v0 + 1;
          if (!edges.empty() && edges.back().u == v0) min_w = edges.back().v;
          for (int w = min_w; w < k; ++w) {
            if (need[w] == 0) continue;
            --need[v0];
            --need[w];
            edges.push_back({v0, w});
            pair_up(v0);
            edges.pop_back();
            ++need[v0];
            ++need[w];
          }
        };
        pair_up(0);
        return;
      }
      const int lo = v == 0 ? 0 : semi[v - 1];
      for (int s = lo; s <= std::min(3, left); ++s) {
        semi[v] = s;
        spread(v + 1, left - s);
      }
    };
    spread(0, attached);
  }
}

}  // namespace

std::optional<Multipole> find_reduction(const Multipole& m, int vertex_budget,
                                        const Budget& budget) {
  const ColSet target = tait_colorings(m, budget);
  const int arity = m.arity();
  NodeMeter meter(budget, "reduction search");
  std::set<std::vector<ColTuple>> tried;
  std::vector<int> identity(arity);
  std::iota(identity.begin(), identity.end(), 0);
  const int limit = std::min(m.num_vertices() - 1, vertex_budget);
  for (int k = 0; k <= limit; ++k) {
    std::optional<Multipole> found;
    enumerate_structures(
        k, arity,
        [&](const Multipole& n) {
          if (found) return;
          ColSet base = tait_colorings(n, budget);
          if (base.empty() || !tried.insert(base.tuples).second) return;
          std::vector<int> order = identity;
          do {
            meter.tick();
            if (is_subset(permute(base, order), target)) {
              found = reorder_semiedges(n, order);
              return;
            }
          } while (std::next_permutation(order.begin(), order.end()));
        },
        meter);
    if (found) return found;
  }
  return std::nullopt;
}

}  // namespace snark
