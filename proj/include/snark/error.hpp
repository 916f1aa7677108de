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

#ifndef SNARK_ERROR_HPP_
#define SNARK_ERROR_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace snark {

// Every failure raised by the library carries one of these kinds so callers
// (mostly the harness) can map it to a report status or exit code without
// string matching.
enum class ErrorKind {
  kMalformedGraph6,
  kMalformedEdgeList,
  kLoopEncountered,
  kInvalidVertex,
  kNotSimple,
  kNotCubic,
  kNotSubcubic,
  kLoopCreated,
  kDisconnected,
  kBridgeDetected,
  kNoTwoFactor,
  kNotAMatching,
  kNoChainAtVertex,
  kUncoloredEdgeAtVertex,
  kNotClass2,
  kArityMismatch,
  kInvalidPairing,
  kNotACut,
  kEdgeNotFound,
  kEvenK,
  kMatchingValidationFailed,
  kNoColorZeroEdgeInBlock,
  kNoQualifyingGraph,
  kDenominatorCapReached,
  kBudgetExhausted,
  kWidthExceeded,
  kInvalidArgument,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised when a search runs past its node budget. The best bound found so far
// travels with the exception; `has_bound()` is false when nothing feasible was
// seen yet.
class BudgetExhausted : public Error {
 public:
  BudgetExhausted(const std::string& what, std::int64_t best_bound,
                  bool has_bound = true)
      : Error(ErrorKind::kBudgetExhausted, what),
        best_bound_(best_bound),
        has_bound_(has_bound) {}
  std::int64_t best_bound() const { return best_bound_; }
  bool has_bound() const { return has_bound_; }

 private:
  std::int64_t best_bound_;
  bool has_bound_;
};

}  // namespace snark

#endif  // SNARK_ERROR_HPP_
