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

#ifndef SNARK_BUDGET_HPP_
#define SNARK_BUDGET_HPP_

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include "snark/error.hpp"

namespace snark {

// Work limit for a single solver call. A "node" is one search-tree node for
// backtracking solvers and one stored state for the frontier dynamic programs.
struct Budget {
  std::uint64_t max_nodes = 100'000'000;
  // Memory guard for the frontier programs: states kept in one layer.
  std::uint64_t max_layer_states = 1u << 23;
  // Wall-clock cut-off, checked every few thousand nodes.
  std::optional<std::chrono::steady_clock::time_point> deadline;

  static Budget unlimited() {
    return Budget{~std::uint64_t{0}, ~std::uint64_t{0}, std::nullopt};
  }
  static Budget with_seconds(std::uint64_t nodes, double seconds) {
    Budget b;
    b.max_nodes = nodes;
    b.deadline =
        std::chrono::steady_clock::now() +
        std::chrono::duration_cast<std::chrono::steady_clock::duration>(
            std::chrono::duration<double>(seconds));
    return b;
  }
};

// Counts nodes against a Budget and throws BudgetExhausted once it is spent.
class NodeMeter {
 public:
  NodeMeter(const Budget& budget, std::string what)
      : limit_(budget.max_nodes),
        deadline_(budget.deadline),
        what_(std::move(what)) {}

  // Returns normally while the budget lasts. `best` is reported in the
  // exception; pass has_best=false when no feasible solution is known yet.
  void tick(std::int64_t best = 0, bool has_best = false,
            std::uint64_t amount = 1) {
    used_ += amount;
    if (used_ > limit_) {
      throw BudgetExhausted(what_ + ": node budget exhausted", best, has_best);
    }
    if (deadline_ && (used_ & 0xfff) < amount &&
        std::chrono::steady_clock::now() > *deadline_) {
      throw BudgetExhausted(what_ + ": time budget exhausted", best, has_best);
    }
  }

  std::uint64_t used() const { return used_; }

 private:
  std::uint64_t limit_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  std::uint64_t used_ = 0;
  std::string what_;
};

}  // namespace snark

#endif  // SNARK_BUDGET_HPP_
