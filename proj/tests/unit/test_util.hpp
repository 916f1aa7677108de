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

#ifndef SNARK_TESTS_TEST_UTIL_HPP_
#define SNARK_TESTS_TEST_UTIL_HPP_

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "snark/factors.hpp"
#include "snark/graph.hpp"
#include "snark/graph6.hpp"
#include "snark/multipole.hpp"
#include "snark/structure.hpp"

namespace snark {

// Readable Fraction values in test failure messages.
inline void PrintTo(const Fraction& f, std::ostream* os) {
  *os << f.num << "/" << f.den;
}

}  // namespace snark

namespace snark::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(SNARK_FIXTURE_DIR) + "/" + name;
}

// Connected cubic graphs on n vertices from the fixture corpus.
inline std::vector<MultiGraph> cubic_corpus(int n) {
  return read_graph6_file(
      fixture_path("connected_cubic_n" + std::to_string(n) + ".g6"));
}

inline std::vector<CubicGraph> bridgeless_corpus(int n) {
  std::vector<CubicGraph> out;
  for (const MultiGraph& g : cubic_corpus(n)) {
    if (bridges(g).empty()) out.push_back(as_cubic(g));
  }
  return out;
}

// Random cubic multigraph on n (even) vertices by the pairing model,
// redrawn until loopless; parallel edges are kept unless `simple`.
inline MultiGraph random_cubic(int n, std::mt19937& rng, bool simple) {
  for (;;) {
    std::vector<VertexId> points;
    for (VertexId v = 0; v < n; ++v) {
      for (int i = 0; i < 3; ++i) points.push_back(v);
    }
    std::shuffle(points.begin(), points.end(), rng);
    std::vector<Edge> edges;
    bool ok = true;
    for (std::size_t i = 0; i < points.size(); i += 2) {
      if (points[i] == points[i + 1]) {
        ok = false;
        break;
      }
      edges.push_back(Edge{std::min(points[i], points[i + 1]),
                           std::max(points[i], points[i + 1])});
    }
    if (!ok) continue;
    MultiGraph g(n, edges);
    if (simple && !g.is_simple()) continue;
    if (!g.is_connected()) continue;
    return g;
  }
}

inline MultiGraph random_bridgeless_cubic(int n, std::mt19937& rng,
                                          bool simple) {
  for (;;) {
    MultiGraph g = random_cubic(n, rng, simple);
    if (bridges(g).empty()) return g;
  }
}

// Boundary of the vertex set `side` (bitmask) of g.
inline std::vector<EdgeId> boundary(const MultiGraph& g, std::uint32_t side) {
  std::vector<EdgeId> cut;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (((side >> g.edge(e).u) & 1) != ((side >> g.edge(e).v) & 1)) {
      cut.push_back(e);
    }
  }
  return cut;
}

inline bool has_cycle(const MultiGraph& g, std::uint32_t side) {
  int vertices = 0, edges = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) vertices += (side >> v) & 1;
  for (const Edge& e : g.edges()) {
    edges += ((side >> e.u) & 1) && ((side >> e.v) & 1);
  }
  // A connected side is a tree exactly when it has fewer edges than vertices.
  return edges >= vertices;
}

// Every cut of size <= max_size with a cycle on both sides, up to swapping
// the sides.
inline std::vector<std::vector<EdgeId>> cyclic_cuts(const MultiGraph& g,
                                                    int max_size) {
  std::vector<std::vector<EdgeId>> out;
  const int n = g.num_vertices();
  for (std::uint32_t side = 1; side < (1u << n) - 1; ++side) {
    if (!(side & 1)) continue;
    std::vector<EdgeId> cut = boundary(g, side);
    if (static_cast<int>(cut.size()) > max_size) continue;
    const std::uint32_t other = ((1u << n) - 1) ^ side;
    if (!has_cycle(g, side) || !has_cycle(g, other)) continue;
    std::vector<VertexId> a, b;
    for (VertexId v = 0; v < n; ++v) ((side >> v) & 1 ? a : b).push_back(v);
    if (!g.without_vertices(b).is_connected() ||
        !g.without_vertices(a).is_connected()) {
      continue;
    }
    out.push_back(cut);
  }
  return out;
}

// Random multipole: a random cubic graph with some vertices and edges
// removed, their ends becoming semiedges.
inline Multipole random_multipole(std::mt19937& rng, int max_arity) {
  for (;;) {
    const int n = 4 + 2 * static_cast<int>(rng() % 4);
    MultiGraph g = random_cubic(n, rng, false);
    const int cut_vertices = static_cast<int>(rng() % 3);
    std::vector<char> gone(n, 0);
    for (int i = 0; i < cut_vertices; ++i) gone[rng() % n] = 1;
    std::vector<VertexId> renumber(n, -1);
    int kept = 0;
    for (VertexId v = 0; v < n; ++v) {
      if (!gone[v]) renumber[v] = kept++;
    }
    std::vector<Edge> edges;
    std::vector<Semiedge> semis;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      const Edge& ed = g.edge(e);
      const bool drop = rng() % 6 == 0;
      const bool ug = gone[ed.u], vg = gone[ed.v];
      if (ug && vg) continue;
      if (ug || vg) {
        semis.push_back({renumber[ug ? ed.v : ed.u], -1});
      } else if (drop) {
        semis.push_back({renumber[ed.u], -1});
        semis.push_back({renumber[ed.v], -1});
      } else {
        edges.push_back({renumber[ed.u], renumber[ed.v]});
      }
    }
    if (kept == 0 || semis.empty() ||
        static_cast<int>(semis.size()) > max_arity) {
      continue;
    }
    std::shuffle(semis.begin(), semis.end(), rng);
    return Multipole(kept, edges, semis);
  }
}

}  // namespace snark::testing

#endif  // SNARK_TESTS_TEST_UTIL_HPP_
