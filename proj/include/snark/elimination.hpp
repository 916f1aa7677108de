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

// Vertex elimination orders and the frontier ("edge boundary") dynamic
// program that most exact solvers in this library are built on.
//
// Vertices are processed one at a time. After each step the frontier is the
// list of edges with exactly one processed endpoint. A solver assigns a small
// label to every edge; the DP keeps, for every distinct labelling of the
// frontier (plus an optional integer accumulator), the cheapest way to label
// the processed part. Running time is linear in the number of vertices and
// exponential only in the frontier width.

#ifndef SNARK_ELIMINATION_HPP_
#define SNARK_ELIMINATION_HPP_

#include <absl/container/flat_hash_map.h>
#include <absl/hash/hash.h>

#include <array>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "snark/budget.hpp"
#include "snark/graph.hpp"

namespace snark {

struct EliminationStep {
  VertexId vertex;
  // Frontier positions (before this step) of edges to processed vertices.
  std::vector<int> in_slots;
  // Edges to unprocessed vertices; appended to the frontier in this order.
  std::vector<EdgeId> out_edges;
  // Frontier positions (before this step) that survive, in order.
  std::vector<int> kept_slots;
  // One entry per edge in g.incident(vertex): k >= 0 is old frontier slot k,
  // -(j + 1) is out_edges[j].
  std::vector<int> incident_source;
};

struct EliminationPlan {
  std::vector<EliminationStep> steps;
  int width = 0;  // largest frontier size over all steps
};

// Greedy order: repeatedly take the vertex that grows the frontier least,
// trying every start vertex and keeping the narrowest result.
EliminationPlan plan_elimination(const MultiGraph& g);

// Plan for a fixed order (must be a permutation of the vertices).
EliminationPlan plan_for_order(const MultiGraph& g,
                               const std::vector<VertexId>& order);

// Fixed-size bit string holding the frontier labels of one DP state.
class PackedLabels {
 public:
  static constexpr int kCapacityBits = 128;

  int get(int index, int bits) const {
    int pos = index * bits;
    std::uint64_t word = words_[pos >> 6];
    int off = pos & 63;
    std::uint64_t value = word >> off;
    if (off + bits > 64) value |= words_[(pos >> 6) + 1] << (64 - off);
    return static_cast<int>(value & ((std::uint64_t{1} << bits) - 1));
  }

  void set(int index, int bits, int value) {
    int pos = index * bits;
    int off = pos & 63;
    std::uint64_t mask = (std::uint64_t{1} << bits) - 1;
    std::uint64_t v = static_cast<std::uint64_t>(value) & mask;
    words_[pos >> 6] &= ~(mask << off);
    words_[pos >> 6] |= v << off;
    if (off + bits > 64) {
      int spill = 64 - off;
      words_[(pos >> 6) + 1] &= ~(mask >> spill);
      words_[(pos >> 6) + 1] |= v >> spill;
    }
  }

  bool operator==(const PackedLabels&) const = default;

  template <typename H>
  friend H AbslHashValue(H h, const PackedLabels& p) {
    return H::combine(std::move(h), p.words_[0], p.words_[1]);
  }

 private:
  std::array<std::uint64_t, 2> words_{0, 0};
};

// Frontier labels plus accumulator: the identity of a DP state.
struct DpKey {
  PackedLabels labels;
  std::int64_t acc;
  bool operator==(const DpKey&) const = default;
  template <typename H>
  friend H AbslHashValue(H h, const DpKey& k) {
    return H::combine(std::move(h), k.labels, k.acc);
  }
};

inline constexpr std::int64_t kInfiniteCost =
    std::numeric_limits<std::int64_t>::max() / 4;

// Outcome of a LabelDp run. `labels` has one entry per edge when a witness
// was requested and the instance is feasible.
struct LabelDpResult {
  bool feasible = false;
  std::int64_t cost = kInfiniteCost;
  std::int64_t acc = 0;
  std::vector<int> labels;
  std::uint64_t states = 0;
};

// Minimises total cost over edge labellings. `Rule` supplies:
//   int bits() const;                       bits per label
//   int alphabet() const;                   labels are 0 .. alphabet()-1
//   std::int64_t initial_acc() const;
//   bool edge_allowed(EdgeId, int label) const;
//   std::int64_t edge_cost(EdgeId, int label) const;
//   bool vertex(VertexId, std::span<const int> labels_in_incident_order,
//               std::int64_t acc, std::int64_t* cost, std::int64_t* acc_out)
//       const;                              false rejects the labelling
//   bool finish(std::int64_t acc, std::int64_t* cost) const;
// States whose cost exceeds `cost_cap` are dropped.
template <typename Rule>
LabelDpResult run_label_dp(const MultiGraph& g, const EliminationPlan& plan,
                           const Rule& rule, const Budget& budget,
                           std::int64_t cost_cap = kInfiniteCost,
                           bool want_witness = true,
                           const std::string& what = "frontier dp") {
  using Key = DpKey;
  struct State {
    Key key;
    std::int64_t cost;
    int parent;
    std::uint32_t out_labels;
  };

  const int bits = rule.bits();
  const int alphabet = rule.alphabet();
  if (plan.width * bits > PackedLabels::kCapacityBits) {
    throw Error(ErrorKind::kWidthExceeded,
                what + ": frontier too wide for packed state");
  }

  NodeMeter meter(budget, what);
  std::vector<std::vector<State>> layers;
  std::vector<State> current{
      State{Key{PackedLabels{}, rule.initial_acc()}, 0, -1, 0}};
  LabelDpResult result;
  std::vector<int> incident_labels;
  std::vector<int> out_labels;

  for (const EliminationStep& step : plan.steps) {
    const int outs = static_cast<int>(step.out_edges.size());
    if (outs * bits > 32) {
      throw Error(ErrorKind::kWidthExceeded,
                  what + ": vertex degree too large");
    }
    std::int64_t combos = 1;
    for (int i = 0; i < outs; ++i) combos *= alphabet;

    absl::flat_hash_map<Key, int> index;
    std::vector<State> next;
    incident_labels.assign(step.incident_source.size(), 0);
    out_labels.assign(outs, 0);

    for (int s = 0; s < static_cast<int>(current.size()); ++s) {
      const State& state = current[s];
      for (std::int64_t combo = 0; combo < combos; ++combo) {
        std::int64_t rest = combo;
        bool allowed = true;
        std::int64_t cost = state.cost;
        for (int j = 0; j < outs; ++j) {
          out_labels[j] = static_cast<int>(rest % alphabet);
          rest /= alphabet;
          if (!rule.edge_allowed(step.out_edges[j], out_labels[j])) {
            allowed = false;
            break;
          }
          cost += rule.edge_cost(step.out_edges[j], out_labels[j]);
        }
        if (!allowed) continue;
        for (std::size_t i = 0; i < step.incident_source.size(); ++i) {
          int src = step.incident_source[i];
          incident_labels[i] =
              src >= 0 ? state.key.labels.get(src, bits) : out_labels[-src - 1];
        }
        std::int64_t vertex_cost = 0;
        std::int64_t acc = state.key.acc;
        if (!rule.vertex(step.vertex, incident_labels, state.key.acc,
                         &vertex_cost, &acc)) {
          continue;
        }
        cost += vertex_cost;
        if (cost > cost_cap) continue;

        Key key{PackedLabels{}, acc};
        int pos = 0;
        for (int slot : step.kept_slots) {
          key.labels.set(pos++, bits, state.key.labels.get(slot, bits));
        }
        std::uint32_t packed_out = 0;
        for (int j = 0; j < outs; ++j) {
          key.labels.set(pos++, bits, out_labels[j]);
          packed_out |= static_cast<std::uint32_t>(out_labels[j]) << (j * bits);
        }
        auto [it, inserted] =
            index.try_emplace(key, static_cast<int>(next.size()));
        if (inserted) {
          meter.tick();
          next.push_back(State{key, cost, s, packed_out});
          if (next.size() > budget.max_layer_states) {
            throw BudgetExhausted(what + ": state layer too large", 0, false);
          }
        } else if (cost < next[it->second].cost) {
          next[it->second].cost = cost;
          next[it->second].parent = s;
          next[it->second].out_labels = packed_out;
        }
      }
    }
    result.states += next.size();
    if (want_witness) layers.push_back(std::move(current));
    current = std::move(next);
    if (current.empty()) return result;
  }

  int best = -1;
  std::int64_t best_cost = kInfiniteCost;
  for (int s = 0; s < static_cast<int>(current.size()); ++s) {
    std::int64_t extra = 0;
    if (!rule.finish(current[s].key.acc, &extra)) continue;
    std::int64_t total = current[s].cost + extra;
    if (total < best_cost) {
      best_cost = total;
      best = s;
    }
  }
  if (best < 0 || best_cost > cost_cap) return result;
  result.feasible = true;
  result.cost = best_cost;
  result.acc = current[best].key.acc;
  if (want_witness) {
    result.labels.assign(g.num_edges(), 0);
    layers.push_back(std::move(current));
    int s = best;
    for (int i = static_cast<int>(plan.steps.size()) - 1; i >= 0; --i) {
      const State& state = layers[i + 1][s];
      const EliminationStep& step = plan.steps[i];
      for (std::size_t j = 0; j < step.out_edges.size(); ++j) {
        result.labels[step.out_edges[j]] =
            (state.out_labels >> (j * bits)) & ((1u << bits) - 1);
      }
      s = state.parent;
    }
  }
  return result;
}

}  // namespace snark

#endif  // SNARK_ELIMINATION_HPP_
