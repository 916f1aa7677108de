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

#include "snark/graph.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

namespace snark {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kMalformedGraph6:
      return "MalformedGraph6";
    case ErrorKind::kMalformedEdgeList:
      return "MalformedEdgeList";
    case ErrorKind::kLoopEncountered:
      return "LoopEncountered";
    case ErrorKind::kInvalidVertex:
      return "InvalidVertex";
    case ErrorKind::kNotSimple:
      return "NotSimple";
    case ErrorKind::kNotCubic:
      return "NotCubic";
    case ErrorKind::kNotSubcubic:
      return "NotSubcubic";
    case ErrorKind::kLoopCreated:
      return "LoopCreated";
    case ErrorKind::kDisconnected:
      return "Disconnected";
    case ErrorKind::kBridgeDetected:
      return "BridgeDetected";
    case ErrorKind::kNoTwoFactor:
      return "NoTwoFactor";
    case ErrorKind::kNotAMatching:
      return "NotAMatching";
    case ErrorKind::kNoChainAtVertex:
      return "NoChainAtVertex";
    case ErrorKind::kUncoloredEdgeAtVertex:
      return "UncoloredEdgeAtVertex";
    case ErrorKind::kNotClass2:
      return "NotClass2";
    case ErrorKind::kArityMismatch:
      return "ArityMismatch";
    case ErrorKind::kInvalidPairing:
      return "InvalidPairing";
    case ErrorKind::kNotACut:
      return "NotACut";
    case ErrorKind::kEdgeNotFound:
      return "EdgeNotFound";
    case ErrorKind::kEvenK:
      return "EvenK";
    case ErrorKind::kMatchingValidationFailed:
      return "MatchingValidationFailed";
    case ErrorKind::kNoColorZeroEdgeInBlock:
      return "NoColorZeroEdgeInBlock";
    case ErrorKind::kNoQualifyingGraph:
      return "NoQualifyingGraph";
    case ErrorKind::kDenominatorCapReached:
      return "DenominatorCapReached";
    case ErrorKind::kBudgetExhausted:
      return "BudgetExhausted";
    case ErrorKind::kWidthExceeded:
      return "WidthExceeded";
    case ErrorKind::kInvalidArgument:
      return "InvalidArgument";
  }
  return "Unknown";
}

MultiGraph::MultiGraph(int num_vertices) : MultiGraph(num_vertices, {}) {}

MultiGraph::MultiGraph(int num_vertices, std::vector<Edge> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
  if (num_vertices_ < 0) {
    throw Error(ErrorKind::kInvalidVertex, "negative vertex count");
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u < 0 || e.u >= num_vertices_ || e.v < 0 || e.v >= num_vertices_) {
      throw Error(ErrorKind::kInvalidVertex,
                  fmt::format("edge {} = ({}, {}) has an endpoint outside "
                              "[0, {})",
                              i, e.u, e.v, num_vertices_));
    }
    if (e.u == e.v) {
      throw Error(ErrorKind::kLoopEncountered,
                  fmt::format("edge {} is a loop at vertex {}", i, e.u));
    }
  }
  build_incidence();
}

void MultiGraph::build_incidence() {
  offsets_.assign(num_vertices_ + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (int v = 0; v < num_vertices_; ++v) offsets_[v + 1] += offsets_[v];
  incidence_.assign(offsets_[num_vertices_], 0);
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  for (int i = 0; i < num_edges(); ++i) {
    incidence_[fill[edges_[i].u]++] = i;
    incidence_[fill[edges_[i].v]++] = i;
  }
}

int MultiGraph::max_degree() const {
  int best = 0;
  for (int v = 0; v < num_vertices_; ++v) best = std::max(best, degree(v));
  return best;
}

bool MultiGraph::is_simple() const {
  std::vector<Edge> pairs = normalized_edge_set(*this);
  return std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end();
}

bool MultiGraph::is_connected() const {
  if (num_vertices_ <= 1) return true;
  std::vector<char> seen(num_vertices_, 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (EdgeId e : incident(v)) {
      VertexId w = other(e, v);
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == num_vertices_;
}

MultiGraph MultiGraph::with_edges(std::span<const Edge> extra) const {
  std::vector<Edge> all = edges_;
  all.insert(all.end(), extra.begin(), extra.end());
  return MultiGraph(num_vertices_, std::move(all));
}

MultiGraph MultiGraph::without_edges(std::span<const EdgeId> removed,
                                     std::vector<EdgeId>* kept) const {
  std::vector<char> drop(edges_.size(), 0);
  for (EdgeId e : removed) drop.at(e) = 1;
  std::vector<Edge> rest;
  if (kept != nullptr) kept->clear();
  for (int i = 0; i < num_edges(); ++i) {
    if (drop[i]) continue;
    rest.push_back(edges_[i]);
    if (kept != nullptr) kept->push_back(i);
  }
  return MultiGraph(num_vertices_, std::move(rest));
}

MultiGraph MultiGraph::without_vertices(std::span<const VertexId> removed,
                                        std::vector<VertexId>* kept_vertices,
                                        std::vector<EdgeId>* kept_edges) const {
  std::vector<int> index(num_vertices_, 0);
  for (VertexId v : removed) index.at(v) = -1;
  int next = 0;
  if (kept_vertices != nullptr) kept_vertices->clear();
  for (int v = 0; v < num_vertices_; ++v) {
    if (index[v] < 0) continue;
    index[v] = next++;
    if (kept_vertices != nullptr) kept_vertices->push_back(v);
  }
  std::vector<Edge> rest;
  if (kept_edges != nullptr) kept_edges->clear();
  for (int i = 0; i < num_edges(); ++i) {
    const Edge& e = edges_[i];
    if (index[e.u] < 0 || index[e.v] < 0) continue;
    rest.push_back({index[e.u], index[e.v]});
    if (kept_edges != nullptr) kept_edges->push_back(i);
  }
  return MultiGraph(next, std::move(rest));
}

CubicGraph as_cubic(const MultiGraph& g) {
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) != 3) {
      throw Error(ErrorKind::kNotCubic,
                  fmt::format("vertex {} has degree {}", v, g.degree(v)));
    }
  }
  return CubicGraph(g);
}

MultiGraph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<long long> numbers;
  while (std::getline(in, line)) {
    auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream fields(line);
    long long x;
    while (fields >> x) numbers.push_back(x);
    if (!fields.eof()) {
      throw Error(ErrorKind::kMalformedEdgeList,
                  fmt::format("unparsable line: '{}'", line));
    }
  }
  if (numbers.size() < 2) {
    throw Error(ErrorKind::kMalformedEdgeList, "missing 'n m' header");
  }
  long long n = numbers[0];
  long long m = numbers[1];
  if (n < 0 || m < 0 || numbers.size() != static_cast<std::size_t>(2 + 2 * m)) {
    throw Error(ErrorKind::kMalformedEdgeList,
                fmt::format("header announces {} edges but {} numbers follow",
                            m, numbers.size() - 2));
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  for (long long i = 0; i < m; ++i) {
    edges.push_back({static_cast<int>(numbers[2 + 2 * i]),
                     static_cast<int>(numbers[3 + 2 * i])});
  }
  return MultiGraph(static_cast<int>(n), std::move(edges));
}

std::string write_edge_list(const MultiGraph& g) {
  std::string out = fmt::format("{} {}\n", g.num_vertices(), g.num_edges());
  for (const Edge& e : g.edges()) out += fmt::format("{} {}\n", e.u, e.v);
  return out;
}

std::vector<Edge> normalized_edge_set(const MultiGraph& g) {
  std::vector<Edge> pairs;
  pairs.reserve(g.num_edges());
  for (const Edge& e : g.edges()) {
    pairs.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  std::sort(pairs.begin(), pairs.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  return pairs;
}

}  // namespace snark
