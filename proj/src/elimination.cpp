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

#include "snark/elimination.hpp"

#include <algorithm>
#include <limits>
#include <vector>

namespace snark {
namespace {

// Greedy order from `start`. Returns the order and its peak width via `width`
// and the sum of frontier sizes via `area` (used as a tie-breaker).
std::vector<VertexId> greedy_order(const MultiGraph& g, VertexId start,
                                   int* width, long long* area) {
  const int n = g.num_vertices();
  std::vector<char> done(n, 0);
  // processed_nbrs[v] = number of edge ends from v into processed vertices.
  std::vector<int> into_done(n, 0);
  // Time the oldest frontier edge at v was created; favours finishing old
  // frontier edges first, which keeps long paths from staying open.
  std::vector<int> oldest(n, std::numeric_limits<int>::max());
  std::vector<VertexId> order;
  order.reserve(n);
  int frontier = 0;
  *width = 0;
  *area = 0;
  VertexId next = start;
  for (int t = 0; t < n; ++t) {
    if (next < 0) {
      for (int v = 0; v < n; ++v) {
        if (!done[v]) {
          next = v;
          break;
        }
      }
    }
    VertexId v = next;
    done[v] = 1;
    order.push_back(v);
    frontier += g.degree(v) - 2 * into_done[v];
    *width = std::max(*width, frontier);
    *area += frontier;
    for (EdgeId e : g.incident(v)) {
      VertexId w = g.other(e, v);
      if (!done[w]) {
        ++into_done[w];
        oldest[w] = std::min(oldest[w], t);
      }
    }
    next = -1;
    int best_delta = std::numeric_limits<int>::max();
    for (int w = 0; w < n; ++w) {
      if (done[w] || into_done[w] == 0) continue;
      int delta = g.degree(w) - 2 * into_done[w];
      if (delta < best_delta ||
          (delta == best_delta && oldest[w] < oldest[next])) {
        best_delta = delta;
        next = w;
      }
    }
  }
  return order;
}

}  // namespace

EliminationPlan plan_for_order(const MultiGraph& g,
                               const std::vector<VertexId>& order) {
  const int n = g.num_vertices();
  std::vector<int> position(n, -1);
  for (int i = 0; i < static_cast<int>(order.size()); ++i) {
    position.at(order[i]) = i;
  }
  EliminationPlan plan;
  std::vector<EdgeId> frontier;
  std::vector<int> slot_of(g.num_edges(), -1);
  for (int i = 0; i < n; ++i) {
    VertexId v = order[i];
    EliminationStep step;
    step.vertex = v;
    std::vector<char> leaving(frontier.size(), 0);
    for (EdgeId e : g.incident(v)) {
      VertexId w = g.other(e, v);
      if (position[w] < i) {
        int slot = slot_of[e];
        step.in_slots.push_back(slot);
        step.incident_source.push_back(slot);
        leaving[slot] = 1;
      } else {
        step.incident_source.push_back(
            -static_cast<int>(step.out_edges.size()) - 1);
        step.out_edges.push_back(e);
      }
    }
    std::vector<EdgeId> next;
    for (int s = 0; s < static_cast<int>(frontier.size()); ++s) {
      if (leaving[s]) continue;
      step.kept_slots.push_back(s);
      next.push_back(frontier[s]);
    }
    next.insert(next.end(), step.out_edges.begin(), step.out_edges.end());
    for (int s = 0; s < static_cast<int>(next.size()); ++s) {
      slot_of[next[s]] = s;
    }
    frontier = std::move(next);
    plan.width = std::max(plan.width, static_cast<int>(frontier.size()));
    plan.steps.push_back(std::move(step));
  }
  return plan;
}

EliminationPlan plan_elimination(const MultiGraph& g) {
  const int n = g.num_vertices();
  std::vector<VertexId> best_order;
  int best_width = std::numeric_limits<int>::max();
  long long best_area = 0;
  for (VertexId start = 0; start < n; ++start) {
    int width;
    long long area;
    std::vector<VertexId> order = greedy_order(g, start, &width, &area);
    if (width < best_width || (width == best_width && area < best_area)) {
      best_width = width;
      best_area = area;
      best_order = std::move(order);
    }
  }
  return plan_for_order(g, best_order);
}

}  // namespace snark
