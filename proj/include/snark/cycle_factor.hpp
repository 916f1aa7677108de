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

// Exact search over spanning subgraphs whose degrees are all 2 (or 0 or 2),
// minimising the number of odd components. Frontier states record which
// frontier edges are selected, how the selected ones pair up into open
// paths, and each open path's vertex-count parity.

#ifndef SNARK_CYCLE_FACTOR_HPP_
#define SNARK_CYCLE_FACTOR_HPP_

#include <cstdint>
#include <vector>

#include "snark/budget.hpp"
#include "snark/elimination.hpp"
#include "snark/graph.hpp"

namespace snark {

enum class FactorMode {
  kEvenFactor,   // degrees in {0, 2}; an isolated vertex is an odd component
  kTwoFactor,    // all degrees 2
  kHamiltonian,  // a single circuit through every vertex
};

struct CycleFactorOptions {
  FactorMode mode = FactorMode::kTwoFactor;
  std::vector<EdgeId> forced_in;
  std::vector<EdgeId> forced_out;
  // When >= 0 this edge must be selected and lie on an odd circuit.
  EdgeId odd_edge = -1;
};

struct CycleFactorResult {
  bool feasible = false;
  int odd_components = 0;
  std::vector<EdgeId> edges;  // selected edges, increasing ids
  std::uint64_t states = 0;
};

CycleFactorResult min_odd_factor(const MultiGraph& g,
                                 const CycleFactorOptions& options,
                                 const Budget& budget = {});

// Same, reusing a precomputed elimination plan.
CycleFactorResult min_odd_factor(const MultiGraph& g,
                                 const EliminationPlan& plan,
                                 const CycleFactorOptions& options,
                                 const Budget& budget = {});

}  // namespace snark

#endif  // SNARK_CYCLE_FACTOR_HPP_
