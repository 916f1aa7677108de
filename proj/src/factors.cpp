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

#include "snark/factors.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <numeric>
#include <vector>

#include <fmt/format.h>

#include "rules.hpp"
#include "snark/coloring.hpp"
#include "snark/cycle_factor.hpp"
#include "snark/elimination.hpp"
#include "snark/structure.hpp"

namespace snark {

void for_each_perfect_matching(
    const MultiGraph& g,
    const std::function<bool(const PerfectMatching&)>& visit,
    const Budget& budget) {
  const int n = g.num_vertices();
  if (n % 2 == 1) return;
  NodeMeter meter(budget, "perfect matching enumeration");
  std::vector<char> covered(n, 0);
  PerfectMatching current;
  bool stop = false;
  // Branch on the lowest uncovered vertex; edges in increasing id order.
  std::function<void(VertexId)> search = [&](VertexId from) {
    if (stop) return;
    meter.tick();
    VertexId v = from;
    while (v < n && covered[v]) ++v;
    if (v == n) {
      PerfectMatching sorted = current;
      std::sort(sorted.begin(), sorted.end());
      if (!visit(sorted)) stop = true;
      return;
    }
    covered[v] = 1;
    for (EdgeId e : g.incident(v)) {
      VertexId w = g.other(e, v);
      if (covered[w]) continue;
      covered[w] = 1;
      current.push_back(e);
      search(v + 1);
      current.pop_back();
      covered[w] = 0;
      if (stop) break;
    }
    covered[v] = 0;
  };
  search(0);
}

std::vector<PerfectMatching> perfect_matchings(const MultiGraph& g,
                                               const Budget& budget) {
  std::vector<PerfectMatching> all;
  for_each_perfect_matching(
      g,
      [&](const PerfectMatching& m) {
        all.push_back(m);
        return true;
      },
      budget);
  std::sort(all.begin(), all.end());
  return all;
}

bool is_perfect_matching(const MultiGraph& g, const std::vector<EdgeId>& m) {
  std::vector<int> deg(g.num_vertices(), 0);
  for (EdgeId e : m) {
    if (e < 0 || e >= g.num_edges()) return false;
    ++deg[g.edge(e).u];
    ++deg[g.edge(e).v];
  }
  return std::all_of(deg.begin(), deg.end(), [](int d) { return d == 1; });
}

int EvenFactor::odd_count() const {
  return static_cast<int>(
      std::count_if(components.begin(), components.end(),
                    [](const FactorComponent& c) { return c.odd(); }));
}

EvenFactor describe_factor(const MultiGraph& g, std::vector<EdgeId> edges) {
  const int n = g.num_vertices();
  std::sort(edges.begin(), edges.end());
  std::vector<std::vector<EdgeId>> at(n);
  for (EdgeId e : edges) {
    at[g.edge(e).u].push_back(e);
    at[g.edge(e).v].push_back(e);
  }
  EvenFactor f;
  f.is_two_factor = true;
  for (VertexId v = 0; v < n; ++v) {
    if (at[v].size() != 0 && at[v].size() != 2) {
      throw Error(ErrorKind::kInvalidArgument,
                  fmt::format("vertex {} has degree {} in the factor", v,
                              at[v].size()));
    }
    if (at[v].empty()) f.is_two_factor = false;
  }
  std::vector<char> seen(n, 0);
  for (VertexId s = 0; s < n; ++s) {
    if (seen[s]) continue;
    FactorComponent c;
    // Walk the circuit through s (or just s when isolated).
    VertexId v = s;
    EdgeId prev = -1;
    while (!seen[v]) {
      seen[v] = 1;
      c.vertices.push_back(v);
      if (at[v].empty()) break;
      EdgeId next = at[v][0] == prev ? at[v][1] : at[v][0];
      c.edges.push_back(next);
      prev = next;
      v = g.other(next, v);
    }
    std::sort(c.vertices.begin(), c.vertices.end());
    std::sort(c.edges.begin(), c.edges.end());
    f.components.push_back(std::move(c));
  }
  f.edges = std::move(edges);
  return f;
}

std::vector<EdgeId> complement_edges(const MultiGraph& g,
                                     const std::vector<EdgeId>& edges) {
  std::vector<char> in(g.num_edges(), 0);
  for (EdgeId e : edges) in.at(e) = 1;
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!in[e]) out.push_back(e);
  }
  return out;
}

OddnessResult oddness(const CubicGraph& g, const Budget& budget) {
  CycleFactorOptions options;
  options.mode = FactorMode::kTwoFactor;
  CycleFactorResult r = min_odd_factor(g.graph(), options, budget);
  if (!r.feasible) {
    throw Error(ErrorKind::kNoTwoFactor, "graph has no perfect matching");
  }
  OddnessResult out;
  out.value = r.odd_components;
  out.witness = describe_factor(g.graph(), r.edges);
  return out;
}

OddnessResult oddness_via_perfect_matchings(const CubicGraph& g,
                                            bool class2_known,
                                            const Budget& budget) {
  const int floor_value = class2_known ? 2 : 0;
  OddnessResult best;
  bool found = false;
  for_each_perfect_matching(
      g.graph(),
      [&](const PerfectMatching& m) {
        EvenFactor f = describe_factor(g.graph(), complement_edges(g, m));
        int odd = f.odd_count();
        if (!found || odd < best.value ||
            (odd == best.value && f.edges < best.witness.edges)) {
          best.value = odd;
          best.witness = std::move(f);
          found = true;
        }
        return best.value > floor_value;
      },
      budget);
  if (!found) {
    throw Error(ErrorKind::kNoTwoFactor, "graph has no perfect matching");
  }
  return best;
}

namespace {

// Enumerates spanning subgraphs with every degree in `allowed` (a bitmask
// over 0..3) by deciding edges in id order, and returns the minimum number
// of odd components (isolated vertices count). -1 when none exists.
int enumerate_factors(const MultiGraph& g, unsigned allowed,
                      const Budget& budget, const char* what) {
  const int n = g.num_vertices();
  const int m = g.num_edges();
  NodeMeter meter(budget, what);
  std::vector<int> deg(n, 0), left(n, 0);
  for (VertexId v = 0; v < n; ++v) left[v] = g.degree(v);
  std::vector<EdgeId> chosen;
  int best = -1;
  std::function<void(EdgeId)> search = [&](EdgeId e) {
    meter.tick();
    if (e == m) {
      for (VertexId v = 0; v < n; ++v) {
        if (!((allowed >> deg[v]) & 1)) return;
      }
      EvenFactor f = describe_factor(g, chosen);
      int odd = f.odd_count();
      if (best < 0 || odd < best) best = odd;
      return;
    }
    const Edge& ed = g.edge(e);
    for (int take = 0; take <= 1; ++take) {
      --left[ed.u];
      --left[ed.v];
      deg[ed.u] += take;
      deg[ed.v] += take;
      bool ok = true;
      for (VertexId v : {ed.u, ed.v}) {
        if (deg[v] > 2) ok = false;
        // Once all edges at v are decided its degree is final.
        if (left[v] == 0 && !((allowed >> deg[v]) & 1)) ok = false;
        // Degree 2 must remain reachable if 0 is not allowed.
        if (!(allowed & 1) && deg[v] + left[v] < 2) ok = false;
      }
      if (ok) {
        if (take) chosen.push_back(e);
        search(e + 1);
        if (take) chosen.pop_back();
      }
      deg[ed.u] -= take;
      deg[ed.v] -= take;
      ++left[ed.u];
      ++left[ed.v];
    }
  };
  search(0);
  return best;
}

}  // namespace

int oddness_by_two_factor_enumeration(const MultiGraph& g,
                                      const Budget& budget) {
  int best = enumerate_factors(g, 1u << 2, budget, "2-factor enumeration");
  if (best < 0) {
    throw Error(ErrorKind::kNoTwoFactor, "graph has no 2-factor");
  }
  return best;
}

OddnessResult weak_oddness(const CubicGraph& g, const Budget& budget) {
  CycleFactorOptions options;
  options.mode = FactorMode::kEvenFactor;
  CycleFactorResult r = min_odd_factor(g.graph(), options, budget);
  OddnessResult out;
  out.value = r.odd_components;
  out.witness = describe_factor(g.graph(), r.edges);
  return out;
}

int weak_oddness_by_enumeration(const MultiGraph& g, const Budget& budget) {
  return enumerate_factors(g, (1u << 0) | (1u << 2), budget,
                           "even factor enumeration");
}

namespace {

void require_bridgeless(const MultiGraph& g, const char* what) {
  if (!bridges(g).empty()) {
    throw Error(ErrorKind::kBridgeDetected,
                fmt::format("{} needs a bridgeless graph", what));
  }
}

// Edge sets as fixed-width bit masks for the matching-list searches.
constexpr int kMaskWords = 2;
using EdgeMask = std::array<std::uint64_t, kMaskWords>;

EdgeMask mask_of(const PerfectMatching& m) {
  EdgeMask mask{};
  for (EdgeId e : m) mask[e >> 6] |= std::uint64_t{1} << (e & 63);
  return mask;
}

int popcount(const EdgeMask& a) {
  int c = 0;
  for (std::uint64_t w : a) c += std::popcount(w);
  return c;
}

EdgeMask operator|(const EdgeMask& a, const EdgeMask& b) {
  EdgeMask r;
  for (int i = 0; i < kMaskWords; ++i) r[i] = a[i] | b[i];
  return r;
}

int count_new(const EdgeMask& base, const EdgeMask& add) {
  int c = 0;
  for (int i = 0; i < kMaskWords; ++i) c += std::popcount(add[i] & ~base[i]);
  return c;
}

void require_mask_capacity(const MultiGraph& g) {
  if (g.num_edges() > 64 * kMaskWords) {
    throw Error(ErrorKind::kInvalidArgument,
                fmt::format("matching-list search supports at most {} edges",
                            64 * kMaskWords));
  }
}

}  // namespace

Gamma2Result gamma2(const CubicGraph& g, const Budget& budget) {
  require_bridgeless(g, "gamma2");
  rules::MatchingTupleRule rule;
  rule.k = 2;
  rule.count_uncovered = false;
  LabelDpResult r = run_label_dp(g.graph(), plan_elimination(g.graph()), rule,
                                 budget, kInfiniteCost, true, "gamma2");
  Gamma2Result out;
  out.value = static_cast<int>(r.cost);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (r.labels[e] & 1) out.m1.push_back(e);
    if (r.labels[e] & 2) out.m2.push_back(e);
  }
  return out;
}

int gamma2_by_pair_scan(const std::vector<PerfectMatching>& matchings) {
  int best = -1;
  for (std::size_t i = 0; i < matchings.size(); ++i) {
    for (std::size_t j = i; j < matchings.size(); ++j) {
      std::vector<EdgeId> common;
      std::set_intersection(matchings[i].begin(), matchings[i].end(),
                            matchings[j].begin(), matchings[j].end(),
                            std::back_inserter(common));
      int c = static_cast<int>(common.size());
      if (best < 0 || c < best) best = c;
    }
  }
  return best;
}

Fraction::Fraction(std::int64_t n, std::int64_t d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  std::int64_t g = std::gcd(n < 0 ? -n : n, d);
  if (g == 0) g = 1;
  num = n / g;
  den = d / g;
}

MuResult mu_k(const CubicGraph& g, int k, const Budget& budget) {
  require_bridgeless(g, "mu_k");
  return mu_k(g.graph(), perfect_matchings(g.graph(), budget), k, budget);
}

MuResult mu_k(const MultiGraph& g, const std::vector<PerfectMatching>& list,
              int k, const Budget& budget) {
  if (k < 1) throw Error(ErrorKind::kInvalidArgument, "k must be >= 1");
  if (list.empty()) throw Error(ErrorKind::kNoTwoFactor, "no perfect matching");
  require_mask_capacity(g);
  const int m = g.num_edges();
  const int p = static_cast<int>(list.size());
  const int half = g.num_vertices() / 2;
  std::vector<EdgeMask> masks;
  masks.reserve(p);
  for (const PerfectMatching& pm : list) masks.push_back(mask_of(pm));

  NodeMeter meter(budget, "mu_k");
  int best_cover = -1;
  std::vector<int> best_pick, pick;
  // Nondecreasing index tuples. The last matching is a plain scan; a node
  // is cut when even `remaining` disjoint full matchings cannot beat the
  // best cover.
  std::function<void(int, const EdgeMask&, int, int)> search =
      [&](int from, const EdgeMask& covered, int size, int remaining) {
        meter.tick(m - best_cover, best_cover >= 0);
        if (size > best_cover) {
          best_cover = size;
          best_pick = pick;
        }
        if (remaining == 0 || best_cover == m) return;
        if (size + std::min(remaining * half, m - size) <= best_cover) return;
        if (remaining == 1) {
          for (int j = from; j < p; ++j) {
            const int total = size + count_new(covered, masks[j]);
            if (total > best_cover) {
              best_cover = total;
              best_pick = pick;
              best_pick.push_back(j);
            }
          }
          return;
        }
        for (int j = from; j < p && best_cover < m; ++j) {
          pick.push_back(j);
          search(j, covered | masks[j], size + count_new(covered, masks[j]),
                 remaining - 1);
          pick.pop_back();
        }
      };
  search(0, EdgeMask{}, 0, k);
  // Pad with repeats when fewer than k matchings were needed.
  while (static_cast<int>(best_pick.size()) < k) {
    best_pick.push_back(best_pick.front());
  }
  MuResult out;
  out.value = m - best_cover;
  for (int j : best_pick) out.matchings.push_back(list[j]);
  out.covered = Fraction(best_cover, m);
  return out;
}

int mu3_by_dp(const CubicGraph& g, const Budget& budget) {
  require_bridgeless(g, "mu3");
  rules::MatchingTupleRule rule;
  rule.k = 3;
  LabelDpResult r = run_label_dp(g.graph(), plan_elimination(g.graph()), rule,
                                 budget, kInfiniteCost, false, "mu3");
  return static_cast<int>(r.cost);
}

ExcessiveIndexResult excessive_index(const CubicGraph& g, int cap,
                                     const Budget& budget) {
  require_bridgeless(g, "excessive_index");
  require_mask_capacity(g);
  std::vector<PerfectMatching> list = perfect_matchings(g.graph(), budget);
  const int m = g.num_edges();
  const int p = static_cast<int>(list.size());
  std::vector<EdgeMask> masks;
  for (const PerfectMatching& pm : list) masks.push_back(mask_of(pm));
  // containing[e] = matchings through edge e.
  std::vector<std::vector<int>> containing(m);
  for (int j = 0; j < p; ++j) {
    for (EdgeId e : list[j]) containing[e].push_back(j);
  }
  NodeMeter meter(budget, "excessive index");
  ExcessiveIndexResult out;
  out.cap = cap;
  std::vector<int> pick;
  // Exact set cover with at most `limit` sets: branch on the uncovered edge
  // lying in the fewest matchings.
  std::function<bool(const EdgeMask&, int)> cover = [&](const EdgeMask& covered,
                                                        int limit) {
    meter.tick();
    if (popcount(covered) == m) return true;
    if (limit == 0) return false;
    int best_edge = -1;
    std::size_t fewest = 0;
    for (EdgeId e = 0; e < m; ++e) {
      if ((covered[e >> 6] >> (e & 63)) & 1) continue;
      if (best_edge < 0 || containing[e].size() < fewest) {
        best_edge = e;
        fewest = containing[e].size();
      }
    }
    // Each new matching adds at most as many edges as the best single one.
    const int uncovered = m - popcount(covered);
    if (uncovered > limit * (g.num_vertices() / 2)) return false;
    int gain = 0;
    for (const EdgeMask& mask : masks) {
      int fresh = 0;
      for (int w = 0; w < kMaskWords; ++w) {
        fresh += std::popcount(mask[w] & ~covered[w]);
      }
      gain = std::max(gain, fresh);
    }
    if (uncovered > limit * gain) return false;
    for (int j : containing[best_edge]) {
      pick.push_back(j);
      if (cover(covered | masks[j], limit - 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  // Three matchings cover E exactly when they are the colour classes of a
  // Tait colouring.
  EdgeColoring tait;
  if (chromatic_index(g, &tait, budget) == 3) {
    out.value = 3;
    for (int c = 1; c <= 3; ++c) {
      PerfectMatching pm;
      for (EdgeId e = 0; e < m; ++e) {
        if (tait.color[e] == c) pm.push_back(e);
      }
      out.cover.push_back(std::move(pm));
    }
    return out;
  }
  for (int k = 4; k <= cap; ++k) {
    pick.clear();
    if (cover(EdgeMask{}, k)) {
      out.value = k;
      // Pad with repeats so the cover has exactly k entries.
      while (static_cast<int>(pick.size()) < k) pick.push_back(pick.front());
      for (int j : pick) out.cover.push_back(list[j]);
      return out;
    }
  }
  return out;
}

CoreDecomposition core_of(const CubicGraph& g,
                          const std::array<PerfectMatching, 3>& matchings) {
  for (const PerfectMatching& pm : matchings) {
    if (!is_perfect_matching(g, pm)) {
      throw Error(ErrorKind::kNotAMatching,
                  "core_of needs three perfect matchings");
    }
  }
  CoreDecomposition core;
  core.matchings = matchings;
  core.num_edges = g.num_edges();
  std::vector<int> times(g.num_edges(), 0);
  for (const PerfectMatching& pm : matchings) {
    for (EdgeId e : pm) ++times[e];
  }
  std::vector<int> deg(g.num_vertices(), 0);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    core.classes[times[e]].push_back(e);
    if (times[e] != 1) {
      core.core_edges.push_back(e);
      ++deg[g.edge(e).u];
      ++deg[g.edge(e).v];
    }
  }
  core.is_cyclic = !core.core_edges.empty() &&
                   std::all_of(deg.begin(), deg.end(),
                               [](int d) { return d == 0 || d == 2; });
  return core;
}

}  // namespace snark
