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

#ifndef SNARK_HARNESS_HPP_
#define SNARK_HARNESS_HPP_

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "snark/coloring.hpp"
#include "snark/factors.hpp"
#include "snark/flows.hpp"
#include "snark/graph.hpp"

namespace snark {

inline constexpr int kReportSchema = 1;

enum class MeasureStatus { kExact, kBounded, kSkipped };
const char* measure_status_name(MeasureStatus status);

// Measure names in report order.
const std::vector<std::string>& measure_names();

struct MeasureValue {
  std::string name;
  MeasureStatus status = MeasureStatus::kSkipped;
  // Integers and flags use den == 1. A bounded measure holds its best upper
  // bound here when one is known.
  std::optional<Fraction> value;
  double seconds = 0;
  std::string note;
};

struct ReportWitnesses {
  std::optional<EdgeColoring> resistance;          // proper, class 0 minimal
  std::optional<std::vector<EdgeId>> two_factor;   // realises the oddness
  std::optional<std::vector<EdgeId>> even_factor;  // realises weak oddness
  std::optional<KleinFlow> flow_resistance;
  // Circular (p, q) flow realising F_c.
  std::optional<IntegerFlow> circular_flow;
  Fraction circular_value;
};

struct MeasureReport {
  std::string id;
  MultiGraph graph;
  int n = 0;
  int m = 0;
  // Set when the input was not processed (not cubic, parse error).
  std::string input_error;
  std::vector<MeasureValue> measures;
  ReportWitnesses witnesses;
  // Cross-measure inequalities violated by exact values.
  std::vector<std::string> violations;

  bool consistent() const { return violations.empty(); }
  const MeasureValue* find(const std::string& name) const;
  MeasureValue* find(const std::string& name);
  // The value of `name` when its status is exact.
  std::optional<Fraction> exact(const std::string& name) const;
};

struct MeasureConfig {
  // Empty means every measure.
  std::set<std::string> measures;
  std::uint64_t node_budget = 100'000'000;
  // Per measure per graph; 0 disables the clock.
  double seconds_per_measure = 600;
  int q_cap = 10;
  int excessive_cap = 8;
  int threads = 1;
};

struct InputGraph {
  std::string id;
  MultiGraph graph;
  std::string error;  // non-empty: the input is reported but not measured
};

// Every non-blank line of a graph6 file, with ids "<path>:<index>". Lines
// that fail to parse become inputs carrying an error.
std::vector<InputGraph> load_graph6_inputs(const std::string& path);
// Builder names as accepted by build_named.
std::vector<InputGraph> load_builder_inputs(
    const std::vector<std::string>& names);

MeasureReport compute_report(const InputGraph& input,
                             const MeasureConfig& config);

// Reports in input order; graphs are spread over config.threads workers.
std::vector<MeasureReport> run_measures(const std::vector<InputGraph>& inputs,
                                        const MeasureConfig& config);

// Cross-measure relations among the exact values of one report.
std::vector<std::string> consistency_violations(const MeasureReport& report);

// Re-validates every stored witness against the reported values.
std::vector<std::string> witness_problems(const MeasureReport& report);

// Deterministic JSON: wall times go to a separate "timing" object, omitted
// unless `with_timing`.
nlohmann::json report_to_json(const MeasureReport& report, bool with_timing);
std::string reports_to_csv(const std::vector<MeasureReport>& reports);

struct TheoremFailure {
  std::string graph_id;
  std::string message;
  nlohmann::json witness;  // graph edge list plus the stored witnesses
};

struct TheoremEntry {
  std::string id;
  std::string statement;
  int graphs_tested = 0;
  bool passed = true;
  // Observations are reported but never fail the suite.
  bool observation = false;
  std::vector<TheoremFailure> failures;
};

struct VerificationReport {
  std::vector<TheoremEntry> entries;
  bool passed() const;
  const TheoremEntry* find(const std::string& id) const;
};

// Theorem instances over already computed reports. The corpus facts
// (no_snark_12_14_16, unique_snark_10) assume the n = 10..16 inputs form
// complete corpora without duplicates.
VerificationReport verify_reports(const std::vector<MeasureReport>& reports);

VerificationReport verify_suite(const std::vector<InputGraph>& inputs,
                                const MeasureConfig& config);

nlohmann::json verification_to_json(const VerificationReport& report);

struct RatioStat {
  Fraction value;  // k / n of the smallest qualifying graph
  std::string graph_id;
  int qualifying = 0;
  std::string label = "corpus lower bound";
};

// max k / n over reports whose exact `tau` is at least k. Throws
// kNoQualifyingGraph when none qualifies.
RatioStat ratio_stats(const std::vector<MeasureReport>& reports,
                      const std::string& tau, int k);

}  // namespace snark

#endif  // SNARK_HARNESS_HPP_
