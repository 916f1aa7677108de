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

#ifndef SNARK_GRAPH_HPP_
#define SNARK_GRAPH_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "snark/error.hpp"

namespace snark {

using VertexId = int;
using EdgeId = int;

struct Edge {
  VertexId u;
  VertexId v;

  bool operator==(const Edge&) const = default;
};

// Loopless multigraph with positional edge identities: edge i is the i-th
// pair handed to the constructor and keeps that id for the lifetime of the
// value. Graphs are immutable; every "modification" returns a new graph.
class MultiGraph {
 public:
  MultiGraph() = default;
  explicit MultiGraph(int num_vertices);
  MultiGraph(int num_vertices, std::vector<Edge> edges);

  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }

  // Incident edge ids of `v`, in increasing id order.
  std::span<const EdgeId> incident(VertexId v) const {
    return {incidence_.data() + offsets_[v],
            incidence_.data() + offsets_[v + 1]};
  }
  int degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  int max_degree() const;

  VertexId other(EdgeId e, VertexId v) const {
    return edges_[e].u == v ? edges_[e].v : edges_[e].u;
  }

  // True when no two edges join the same pair of vertices.
  bool is_simple() const;
  bool is_connected() const;

  // Returns the graph with `extra` appended after the existing edges.
  MultiGraph with_edges(std::span<const Edge> extra) const;

  // Returns the graph without the listed edges. Surviving edges keep their
  // relative order; `kept` (optional) receives old ids in new-id order.
  MultiGraph without_edges(std::span<const EdgeId> removed,
                           std::vector<EdgeId>* kept = nullptr) const;

  // Returns the subgraph induced on the complement of `removed`. Surviving
  // vertices are renumbered in increasing order; `kept_vertices` receives the
  // old vertex ids and `kept_edges` the old edge ids.
  MultiGraph without_vertices(std::span<const VertexId> removed,
                              std::vector<VertexId>* kept_vertices = nullptr,
                              std::vector<EdgeId>* kept_edges = nullptr) const;

  bool operator==(const MultiGraph& other) const {
    return num_vertices_ == other.num_vertices_ && edges_ == other.edges_;
  }

 private:
  void build_incidence();

  int num_vertices_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offsets_{0};
  std::vector<EdgeId> incidence_;
};

// A MultiGraph in which every vertex has degree exactly 3.
class CubicGraph {
 public:
  const MultiGraph& graph() const { return graph_; }
  operator const MultiGraph&() const { return graph_; }  // NOLINT

  int num_vertices() const { return graph_.num_vertices(); }
  int num_edges() const { return graph_.num_edges(); }
  const Edge& edge(EdgeId e) const { return graph_.edge(e); }
  std::span<const EdgeId> incident(VertexId v) const {
    return graph_.incident(v);
  }
  VertexId other(EdgeId e, VertexId v) const { return graph_.other(e, v); }

  friend CubicGraph as_cubic(const MultiGraph& g);

 private:
  explicit CubicGraph(MultiGraph g) : graph_(std::move(g)) {}
  MultiGraph graph_;
};

// Throws Error(kNotCubic) naming the first vertex whose degree is not 3.
CubicGraph as_cubic(const MultiGraph& g);

// Plain-text sidecar format for multigraphs: a header line "n m" followed by
// m lines "u v". Blank lines and lines starting with '#' are ignored.
MultiGraph parse_edge_list(const std::string& text);
std::string write_edge_list(const MultiGraph& g);

// Sorted list of vertex pairs (u < v); used to compare edge sets ignoring ids.
std::vector<Edge> normalized_edge_set(const MultiGraph& g);

}  // namespace snark

#endif  // SNARK_GRAPH_HPP_
