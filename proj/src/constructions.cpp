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

#include "snark/constructions.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include <fmt/format.h>

#include "snark/coloring.hpp"
#include "snark/cycle_factor.hpp"
#include "snark/factors.hpp"
#include "snark/multipole.hpp"
#include "snark/structure.hpp"

namespace snark {

CubicGraph petersen() {
  std::vector<std::pair<int, int>> subsets;
  for (int a = 1; a <= 5; ++a) {
    for (int b = a + 1; b <= 5; ++b) subsets.emplace_back(a, b);
  }
  std::vector<Edge> edges;
  for (int i = 0; i < 10; ++i) {
    for (int j = i + 1; j < 10; ++j) {
      auto [a, b] = subsets[i];
      auto [c, d] = subsets[j];
      if (a != c && a != d && b != c && b != d) edges.push_back({i, j});
    }
  }
  return as_cubic(MultiGraph(10, std::move(edges)));
}

PetersenMinusVertex petersen_minus_vertex() {
  VertexId removed[] = {0};
  MultiGraph g = petersen().graph().without_vertices(removed);
  // Neighbours of {1,2} are {3,4}, {3,5}, {4,5}: old ids 7, 8, 9.
  return {std::move(g), 6, 7, 8};
}

CubicGraph k4() {
  return as_cubic(
      MultiGraph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}}));
}

CubicGraph k33() {
  std::vector<Edge> edges;
  for (int a = 0; a < 3; ++a) {
    for (int b = 3; b < 6; ++b) edges.push_back({a, b});
  }
  return as_cubic(MultiGraph(6, std::move(edges)));
}

CubicGraph flower_snark(int k) {
  if (k < 3 || k % 2 == 0) {
    throw Error(ErrorKind::kEvenK,
                fmt::format("flower snark needs odd k >= 3, got {}", k));
  }
  auto a = [](int i) { return i; };
  auto b = [k](int i) { return k + i; };
  auto c = [k](int i) { return 2 * k + i; };
  auto d = [k](int i) { return 3 * k + i; };
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) {
    edges.push_back({a(i), b(i)});
    edges.push_back({a(i), c(i)});
    edges.push_back({a(i), d(i)});
  }
  for (int i = 0; i < k; ++i) edges.push_back({b(i), b((i + 1) % k)});
  for (int i = 0; i + 1 < k; ++i) edges.push_back({c(i), c(i + 1)});
  edges.push_back({c(k - 1), d(0)});
  for (int i = 0; i + 1 < k; ++i) edges.push_back({d(i), d(i + 1)});
  edges.push_back({d(k - 1), c(0)});
  return as_cubic(MultiGraph(4 * k, std::move(edges)));
}

GlueResult glue(const CubicGraph& g, EdgeId xy, const CubicGraph& h,
                EdgeId uv) {
  if (xy < 0 || xy >= g.num_edges()) {
    throw Error(ErrorKind::kEdgeNotFound, fmt::format("no edge {} in G", xy));
  }
  if (uv < 0 || uv >= h.num_edges()) {
    throw Error(ErrorKind::kEdgeNotFound, fmt::format("no edge {} in H", uv));
  }
  const int offset = g.num_vertices();
  std::vector<Edge> edges;
  std::vector<EdgeId> g_map(g.num_edges(), -1);
  std::vector<EdgeId> h_map(h.num_edges(), -1);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (e == xy) continue;
    g_map[e] = static_cast<EdgeId>(edges.size());
    edges.push_back(g.edge(e));
  }
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    if (e == uv) continue;
    h_map[e] = static_cast<EdgeId>(edges.size());
    edges.push_back({h.edge(e).u + offset, h.edge(e).v + offset});
  }
  const Edge& a = g.edge(xy);
  const Edge& b = h.edge(uv);
  EdgeId xu = static_cast<EdgeId>(edges.size());
  edges.push_back({a.u, b.u + offset});
  edges.push_back({a.v, b.v + offset});
  return GlueResult{
      as_cubic(MultiGraph(offset + h.num_vertices(), std::move(edges))),
      xu,
      xu + 1,
      std::move(g_map),
      std::move(h_map),
      offset};
}

GlueResult glue_petersen(const CubicGraph& g, EdgeId xy) {
  return glue(g, xy, petersen(), 0);
}

namespace {

// Checks both matching properties on P: every 2-factor is two 5-circuits
// meeting M in one edge each, and some even factor with two odd components
// (the minimum) contains all of M.
bool satisfies_matching_properties(const CubicGraph& p,
                                   const std::array<EdgeId, 3>& m) {
  auto in_m = [&](EdgeId e) {
    return std::find(m.begin(), m.end(), e) != m.end();
  };
  for (const PerfectMatching& pm : perfect_matchings(p)) {
    EvenFactor f = describe_factor(p, complement_edges(p, pm));
    if (f.components.size() != 2) return false;
    for (const FactorComponent& c : f.components) {
      if (c.edges.size() != 5) return false;
      if (std::count_if(c.edges.begin(), c.edges.end(), in_m) != 1) {
        return false;
      }
    }
  }
  CycleFactorOptions options;
  options.mode = FactorMode::kEvenFactor;
  const int minimum = min_odd_factor(p, options).odd_components;
  options.forced_in.assign(m.begin(), m.end());
  CycleFactorResult forced = min_odd_factor(p, options);
  return forced.feasible && forced.odd_components == minimum;
}

bool is_maximal_matching(const MultiGraph& g, const std::array<EdgeId, 3>& m) {
  std::vector<char> covered(g.num_vertices(), 0);
  for (EdgeId e : m) {
    if (covered[g.edge(e).u] || covered[g.edge(e).v]) return false;
    covered[g.edge(e).u] = covered[g.edge(e).v] = 1;
  }
  for (const Edge& e : g.edges()) {
    if (!covered[e.u] && !covered[e.v]) return false;
  }
  return true;
}

std::array<EdgeId, 3> search_canonical_matching() {
  CubicGraph p = petersen();
  const int m = p.num_edges();
  for (EdgeId a = 0; a < m; ++a) {
    for (EdgeId b = a + 1; b < m; ++b) {
      for (EdgeId c = b + 1; c < m; ++c) {
        std::array<EdgeId, 3> candidate{a, b, c};
        if (is_maximal_matching(p, candidate) &&
            satisfies_matching_properties(p, candidate)) {
          return candidate;
        }
      }
    }
  }
  throw Error(ErrorKind::kMatchingValidationFailed,
              "no maximal matching of the Petersen graph has the required "
              "2-factor and even-factor properties");
}

// Glues two Petersen copies in series onto edge `e` of `k`: the first onto
// e itself, the second onto the first clone edge.
void glue_petersen_chain(KGraph& k, EdgeId& e, std::vector<EdgeId*> tracked) {
  tracked.push_back(&e);
  for (int copy = 0; copy < 2; ++copy) {
    GlueResult r = glue_petersen(k.graph, e);
    // A pair member glued over is replaced by the new clone edge at its
    // first end; the pair stays a 2-edge-cut.
    for (auto& pair : k.clone_pairs) {
      for (EdgeId& id : pair) {
        id = id == e ? r.clone_xu : r.g_edges[id];
      }
    }
    for (EdgeId* id : tracked) {
      if (id != &e) *id = r.g_edges[*id];
    }
    k.clone_pairs.push_back({r.clone_xu, r.clone_yv});
    k.graph = std::move(r.graph);
    e = r.clone_xu;
  }
}

}  // namespace

std::array<EdgeId, 3> canonical_petersen_matching() {
  static const std::array<EdgeId, 3> kMatching = search_canonical_matching();
  return kMatching;
}

KGraph build_K() {
  auto [e1, e2, e3] = canonical_petersen_matching();
  KGraph k{petersen(), e1, {}};
  glue_petersen_chain(k, e2, {&k.e1, &e3});
  glue_petersen_chain(k, e3, {&k.e1});
  return k;
}

KGraph build_K_star() {
  KGraph k = build_K();
  GlueResult r = glue_petersen(k.graph, k.e1);
  for (auto& pair : k.clone_pairs) {
    for (EdgeId& id : pair) id = r.g_edges[id];
  }
  k.clone_pairs.push_back({r.clone_xu, r.clone_yv});
  k.graph = std::move(r.graph);
  // e1 itself is gone; report its first clone edge.
  k.e1 = r.clone_xu;
  return k;
}

HGraph build_H28() {
  PetersenMinusVertex pm = petersen_minus_vertex();
  const int block = pm.graph.num_vertices();
  const VertexId hub = 3 * block;
  std::vector<Edge> edges;
  std::array<std::vector<VertexId>, 3> blocks;
  for (int i = 0; i < 3; ++i) {
    const int off = i * block;
    for (const Edge& e : pm.graph.edges()) {
      edges.push_back({e.u + off, e.v + off});
    }
    for (VertexId v = 0; v < block; ++v) blocks[i].push_back(off + v);
  }
  for (int i = 0; i < 3; ++i) edges.push_back({i * block + pm.y, hub});
  for (int i = 0; i < 3; ++i) {
    edges.push_back({i * block + pm.x, ((i + 1) % 3) * block + pm.z});
  }
  return HGraph{as_cubic(MultiGraph(hub + 1, std::move(edges))), hub,
                std::move(blocks)};
}

GGraph build_G56() {
  HGraph h = build_H28();
  const int r = resistance(h.graph).r;
  // First edge inside the third block that is colour 0 in some minimal
  // 4-edge-colouring.
  std::vector<char> in_block(h.graph.num_vertices(), 0);
  for (VertexId v : h.blocks[2]) in_block[v] = 1;
  EdgeId chosen = -1;
  for (EdgeId e = 0; e < h.graph.num_edges() && chosen < 0; ++e) {
    const Edge& ed = h.graph.edge(e);
    if (!in_block[ed.u] || !in_block[ed.v]) continue;
    std::vector<EdgeId> forced{e};
    auto c = resistance_with_forced_zero(h.graph, forced);
    if (c && c->r == r) chosen = e;
  }
  if (chosen < 0) {
    throw Error(ErrorKind::kNoColorZeroEdgeInBlock,
                fmt::format("no minimal colouring of H (r = {}) uses colour 0 "
                            "inside the third block",
                            r));
  }
  const int n = h.graph.num_vertices();
  const Edge removed = h.graph.edge(chosen);
  std::vector<Edge> edges;
  for (int copy = 0; copy < 2; ++copy) {
    for (EdgeId e = 0; e < h.graph.num_edges(); ++e) {
      if (e == chosen) continue;
      const Edge& ed = h.graph.edge(e);
      edges.push_back({ed.u + copy * n, ed.v + copy * n});
    }
  }
  edges.push_back({removed.u, removed.u + n});
  edges.push_back({removed.v, removed.v + n});
  return GGraph{as_cubic(MultiGraph(2 * n, std::move(edges))),
                {removed, Edge{removed.u + n, removed.v + n}}};
}

CubicGraph build_named(const std::string& name) {
  auto parse_k = [&](std::size_t prefix) {
    const std::string digits = name.substr(prefix);
    if (digits.empty() ||
        !std::all_of(digits.begin(), digits.end(), ::isdigit) ||
        digits.size() > 6) {
      throw Error(ErrorKind::kInvalidArgument,
                  fmt::format("bad parameter in '{}'", name));
    }
    return std::stoi(digits);
  };
  if (name == "petersen") return petersen();
  if (name == "k4") return k4();
  if (name == "k33") return k33();
  if (name == "K") return build_K().graph;
  if (name == "K_star") return build_K_star().graph;
  if (name == "H28") return build_H28().graph;
  if (name == "G56") return build_G56().graph;
  if (name.starts_with("flower:")) return flower_snark(parse_k(7));
  if (name.starts_with("loupekhine:")) return loupekhine(parse_k(11));
  throw Error(ErrorKind::kInvalidArgument,
              fmt::format("unknown graph '{}'", name));
}

std::vector<std::string> builder_names() {
  return {"petersen", "k4",     "k33", "flower:<k>", "loupekhine:<k>",
          "K",        "K_star", "H28", "G56"};
}

}  // namespace snark
