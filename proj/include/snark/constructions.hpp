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

#ifndef SNARK_CONSTRUCTIONS_HPP_
#define SNARK_CONSTRUCTIONS_HPP_

#include <array>
#include <string>
#include <vector>

#include "snark/graph.hpp"

namespace snark {

// Kneser graph K(5,2): vertex i is the i-th 2-subset of {1..5} in
// lexicographic order ({1,2}, {1,3}, ..., {4,5}); edges join disjoint pairs
// and are listed in lexicographic order of their endpoint pairs.
CubicGraph petersen();

struct PetersenMinusVertex {
  MultiGraph graph;  // vertices 1..9 of petersen() renumbered to 0..8
  // Divalent vertices (former neighbours of vertex 0) in increasing order.
  VertexId x, y, z;
};
PetersenMinusVertex petersen_minus_vertex();

CubicGraph k4();
CubicGraph k33();

// Flower snark J_k, k odd >= 3 (J_3 is class 2 with a triangle; the snarks
// start at 5). Vertex layout: a_i = i (centres), b_i = k + i,
// c_i = 2k + i, d_i = 3k + i. The b_i form a k-cycle and
// c_0 .. c_{k-1} d_0 .. d_{k-1} c_0 a 2k-cycle.
CubicGraph flower_snark(int k);

struct GlueResult {
  CubicGraph graph;
  // The two new edges x-u and y-v (the clone edges of xy).
  EdgeId clone_xu;
  EdgeId clone_yv;
  // New ids of the surviving edges of G and H (-1 for the removed edge).
  std::vector<EdgeId> g_edges;
  std::vector<EdgeId> h_edges;
  // Vertex v of H becomes h_offset + v.
  int h_offset;
};

// Removes xy from G and uv from H and joins x-u, y-v, where (x, y) and
// (u, v) are the stored endpoint orders of the edges. G's vertices keep
// their ids; edges are G's survivors, H's survivors, then xu, yv.
GlueResult glue(const CubicGraph& g, EdgeId xy, const CubicGraph& h, EdgeId uv);

// Glues a Petersen graph (through its edge 0) onto edge xy of G.
GlueResult glue_petersen(const CubicGraph& g, EdgeId xy);

// The three-edge maximal matching of petersen() used for K and K*: the
// lexicographically least one whose 2-factor and even-factor properties are
// verified computationally. Throws kMatchingValidationFailed otherwise.
std::array<EdgeId, 3> canonical_petersen_matching();

struct KGraph {
  CubicGraph graph;
  // Edge e1 of the base Petersen graph (untouched by the glueing).
  EdgeId e1;
  // Clone-edge pairs of every glueing, in construction order.
  std::vector<std::array<EdgeId, 2>> clone_pairs;
};
KGraph build_K();
KGraph build_K_star();

struct HGraph {
  CubicGraph graph;
  VertexId hub;
  // Vertex ids of block P_i (i = 0, 1, 2), each a copy of P minus a vertex.
  std::array<std::vector<VertexId>, 3> blocks;
};
HGraph build_H28();

struct GGraph {
  CubicGraph graph;
  // The removed colour-0 edge of each H copy, as (v_i, w_i) in G's ids.
  std::array<Edge, 2> removed;
};
GGraph build_G56();

// Names accepted by build_named: petersen, k4, k33, flower:<k>,
// loupekhine:<k>, K, K_star, H28, G56.
CubicGraph build_named(const std::string& name);
std::vector<std::string> builder_names();

}  // namespace snark

#endif  // SNARK_CONSTRUCTIONS_HPP_
