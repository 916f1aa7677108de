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

#include "snark/cycle_factor.hpp"

#include <absl/container/flat_hash_map.h>

#include <algorithm>
#include <array>
#include <vector>

namespace snark {
namespace {

// Slot code: 0 = edge not selected, otherwise 1 + 2 * path + parity where
// parity is the number of processed vertices on the open path, mod 2.
constexpr int kBits = 5;
constexpr int kMaxPaths = 15;
// Accumulator values for the tracked odd edge.
constexpr int kTrackPending = -1;
constexpr int kTrackDone = -2;

int code_of(int path, int parity) { return 1 + 2 * path + parity; }
int path_of(int code) { return (code - 1) >> 1; }
int parity_of(int code) { return (code - 1) & 1; }

struct Key {
  PackedLabels labels;
  int track;
  bool operator==(const Key&) const = default;
  template <typename H>
  friend H AbslHashValue(H h, const Key& k) {
    return H::combine(std::move(h), k.labels, k.track);
  }
};

struct State {
  Key key;
  int cost;
  int parent;
  std::uint8_t selected_outs;  // bit j set when out edge j is selected
};

}  // namespace

CycleFactorResult min_odd_factor(const MultiGraph& g,
                                 const CycleFactorOptions& options,
                                 const Budget& budget) {
  return min_odd_factor(g, plan_elimination(g), options, budget);
}

CycleFactorResult min_odd_factor(const MultiGraph& g,
                                 const EliminationPlan& plan,
                                 const CycleFactorOptions& options,
                                 const Budget& budget) {
  CycleFactorResult result;
  const int n = g.num_vertices();
  if (n == 0) {
    result.feasible = options.mode != FactorMode::kHamiltonian;
    return result;
  }
  if (plan.width * kBits > PackedLabels::kCapacityBits) {
    throw Error(ErrorKind::kWidthExceeded, "cycle factor: frontier too wide");
  }
  // 0 free, 1 forced in, 2 forced out.
  std::vector<char> force(g.num_edges(), 0);
  for (EdgeId e : options.forced_in) force.at(e) = 1;
  for (EdgeId e : options.forced_out) force.at(e) = 2;
  if (options.odd_edge >= 0) force.at(options.odd_edge) = 1;
  const bool even_mode = options.mode == FactorMode::kEvenFactor;
  const bool hamiltonian = options.mode == FactorMode::kHamiltonian;

  NodeMeter meter(budget, "cycle factor");
  std::vector<std::vector<State>> layers;
  std::vector<State> current{State{
      Key{PackedLabels{}, options.odd_edge >= 0 ? kTrackPending : kTrackDone},
      0, -1, 0}};

  std::vector<int> old_codes;
  std::vector<int> new_codes;
  for (int step_index = 0; step_index < n; ++step_index) {
    const EliminationStep& step = plan.steps[step_index];
    const bool last = step_index == n - 1;
    const int outs = static_cast<int>(step.out_edges.size());
    const int kept = static_cast<int>(step.kept_slots.size());
    absl::flat_hash_map<Key, int> index;
    std::vector<State> next;

    for (int s = 0; s < static_cast<int>(current.size()); ++s) {
      const State& state = current[s];
      int selected_in[2];
      int num_in = 0;
      bool too_many = false;
      for (int slot : step.in_slots) {
        int c = state.key.labels.get(slot, kBits);
        if (c == 0) continue;
        if (num_in == 2) {
          too_many = true;
          break;
        }
        selected_in[num_in++] = c;
      }
      if (too_many) continue;

      // Enumerate subsets of out edges of the right size.
      for (int mask = 0; mask < (1 << outs); ++mask) {
        int picked = __builtin_popcount(mask);
        bool isolated = false;
        if (num_in == 0 && picked == 0) {
          if (!even_mode) continue;
          isolated = true;
        } else if (num_in + picked != 2) {
          continue;
        }
        bool ok = true;
        for (int j = 0; j < outs && ok; ++j) {
          bool on = (mask >> j) & 1;
          char f = force[step.out_edges[j]];
          if ((f == 1 && !on) || (f == 2 && on)) ok = false;
        }
        if (!ok) continue;

        old_codes.resize(kept);
        for (int i = 0; i < kept; ++i) {
          old_codes[i] = state.key.labels.get(step.kept_slots[i], kBits);
        }
        new_codes.assign(outs, 0);
        int cost = state.cost;
        int track = state.key.track;
        // `track` holds the marked path id, or a sentinel.
        if (isolated) {
          cost += 1;
        } else if (num_in == 0) {
          // Start a new path at this vertex; both out edges are its ends.
          int fresh = kMaxPaths;  // temporary id, canonicalised below
          for (int j = 0; j < outs; ++j) {
            if ((mask >> j) & 1) new_codes[j] = code_of(fresh, 1);
          }
        } else if (num_in == 1) {
          int p = path_of(selected_in[0]);
          int q = parity_of(selected_in[0]) ^ 1;
          for (int i = 0; i < kept; ++i) {
            if (old_codes[i] != 0 && path_of(old_codes[i]) == p) {
              old_codes[i] = code_of(p, q);
            }
          }
          for (int j = 0; j < outs; ++j) {
            if ((mask >> j) & 1) new_codes[j] = code_of(p, q);
          }
        } else {
          int p1 = path_of(selected_in[0]);
          int p2 = path_of(selected_in[1]);
          int q = parity_of(selected_in[0]) ^ parity_of(selected_in[1]) ^ 1;
          if (p1 == p2) {
            // Close a circuit through this vertex.
            int parity = parity_of(selected_in[0]) ^ 1;
            if (hamiltonian && !last) continue;
            if (parity == 1) cost += 1;
            if (track == p1) {
              if (parity != 1) continue;
              track = kTrackDone;
            }
          } else {
            for (int i = 0; i < kept; ++i) {
              if (old_codes[i] == 0) continue;
              int p = path_of(old_codes[i]);
              if (p == p1 || p == p2) old_codes[i] = code_of(p1, q);
            }
            if (track == p2) track = p1;
          }
        }
        // Mark the tracked edge's path when it is created.
        for (int j = 0; j < outs; ++j) {
          if (step.out_edges[j] == options.odd_edge) {
            track = path_of(new_codes[j]);
          }
        }

        // Canonical path ids in order of first appearance.
        std::array<int, kMaxPaths + 1> remap;
        remap.fill(-1);
        int next_id = 0;
        Key key{PackedLabels{}, track};
        auto relabel = [&](int c) {
          if (c == 0) return 0;
          int p = path_of(c);
          if (remap[p] < 0) remap[p] = next_id++;
          return code_of(remap[p], parity_of(c));
        };
        bool overflow = false;
        for (int i = 0; i < kept + outs; ++i) {
          int c = i < kept ? old_codes[i] : new_codes[i - kept];
          int r = relabel(c);
          if (next_id > kMaxPaths) {
            overflow = true;
            break;
          }
          key.labels.set(i, kBits, r);
        }
        if (overflow) {
          throw Error(ErrorKind::kWidthExceeded,
                      "cycle factor: too many open paths");
        }
        if (track >= 0) key.track = remap[track];

        auto [it, inserted] =
            index.try_emplace(key, static_cast<int>(next.size()));
        if (inserted) {
          meter.tick();
          next.push_back(State{key, cost, s, static_cast<std::uint8_t>(mask)});
        } else if (cost < next[it->second].cost) {
          next[it->second].cost = cost;
          next[it->second].parent = s;
          next[it->second].selected_outs = static_cast<std::uint8_t>(mask);
        }
      }
    }
    result.states += next.size();
    layers.push_back(std::move(current));
    current = std::move(next);
    if (current.empty()) return result;
  }

  int best = -1;
  for (int s = 0; s < static_cast<int>(current.size()); ++s) {
    if (current[s].key.track != kTrackDone) continue;
    if (best < 0 || current[s].cost < current[best].cost) best = s;
  }
  if (best < 0) return result;
  result.feasible = true;
  result.odd_components = current[best].cost;
  layers.push_back(std::move(current));
  int s = best;
  for (int i = n - 1; i >= 0; --i) {
    const State& state = layers[i + 1][s];
    const EliminationStep& step = plan.steps[i];
    for (std::size_t j = 0; j < step.out_edges.size(); ++j) {
      if ((state.selected_outs >> j) & 1) {
        result.edges.push_back(step.out_edges[j]);
      }
    }
    s = state.parent;
  }
  std::sort(result.edges.begin(), result.edges.end());
  return result;
}

}  // namespace snark
