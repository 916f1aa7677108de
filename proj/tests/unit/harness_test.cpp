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

#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "snark/constructions.hpp"
#include "snark/harness.hpp"
#include "snark/structure.hpp"
#include "test_util.hpp"

namespace snark {
namespace {

InputGraph input_of(const std::string& id, const MultiGraph& g) {
  return InputGraph{id, g, ""};
}

std::vector<InputGraph> small_bridgeless_inputs() {
  std::vector<InputGraph> inputs;
  for (int n = 4; n <= 10; n += 2) {
    int index = 0;
    for (const CubicGraph& g : testing::bridgeless_corpus(n)) {
      inputs.push_back(
          input_of("n" + std::to_string(n) + ":" + std::to_string(index++), g));
    }
  }
  return inputs;
}

Fraction value(const MeasureReport& r, const std::string& name) {
  auto v = r.exact(name);
  EXPECT_TRUE(v.has_value()) << name;
  return v.value_or(Fraction(-1, 1));
}

TEST(HarnessTest, PetersenReport) {
  MeasureReport r = compute_report(input_of("petersen", petersen()), {});
  ASSERT_TRUE(r.input_error.empty());
  EXPECT_EQ(r.n, 10);
  EXPECT_EQ(r.m, 15);
  EXPECT_TRUE(r.consistent());
  EXPECT_EQ(r.measures.size(), measure_names().size());
  const std::vector<std::pair<const char*, Fraction>> expected = {
      {"bridgeless", Fraction(1, 1)},
      {"girth", Fraction(5, 1)},
      {"cyclic_connectivity", Fraction(5, 1)},
      {"class", Fraction(2, 1)},
      {"hypohamiltonian", Fraction(1, 1)},
      {"d", Fraction(2, 1)},
      {"r", Fraction(2, 1)},
      {"rho", Fraction(2, 1)},
      {"r2", Fraction(1, 1)},
      {"omega", Fraction(2, 1)},
      {"weak_oddness", Fraction(2, 1)},
      {"gamma2", Fraction(1, 1)},
      {"mu2", Fraction(6, 1)},
      {"mu3", Fraction(3, 1)},
      {"m2", Fraction(3, 5)},
      {"m3", Fraction(4, 5)},
      {"excessive_index", Fraction(5, 1)},
      {"F", Fraction(5, 1)},
      {"F_c", Fraction(5, 1)},
      {"r_f", Fraction(1, 1)},
      {"phi3", Fraction(2, 1)},
      {"phi4", Fraction(1, 1)},
      {"phi5", Fraction(0, 1)},
      {"flow_critical", Fraction(1, 1)},
  };
  for (const auto& [name, v] : expected) {
    EXPECT_EQ(value(r, name), v) << name;
  }
  EXPECT_TRUE(witness_problems(r).empty());
  ASSERT_TRUE(r.witnesses.two_factor.has_value());
  ASSERT_TRUE(r.witnesses.circular_flow.has_value());
  EXPECT_EQ(r.witnesses.circular_value, Fraction(5, 1));
}

TEST(HarnessTest, ClassOneMeasuresVanish) {
  const MultiGraph prism(
      6,
      {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
  for (const auto& [name, g] : std::vector<std::pair<std::string, MultiGraph>>{
           {"k4", k4()}, {"k33", k33()}, {"prism", prism}}) {
    MeasureReport r = compute_report(input_of(name, g), {});
    EXPECT_TRUE(r.consistent()) << name;
    for (const char* zero : {"d", "r", "rho", "r2", "omega", "weak_oddness",
                             "gamma2", "mu3", "r_f", "phi4", "flow_critical"}) {
      EXPECT_EQ(value(r, zero), Fraction(0, 1)) << name << " " << zero;
    }
    EXPECT_LE(value(r, "F_c"), Fraction(4, 1)) << name;
  }
  MeasureReport bip = compute_report(input_of("k33", k33()), {});
  EXPECT_EQ(value(bip, "F_c"), Fraction(3, 1));
  MeasureReport k4r = compute_report(input_of("k4", k4()), {});
  EXPECT_EQ(value(k4r, "F"), Fraction(4, 1));
}

TEST(HarnessTest, MeasureSelectionAndDerivedSkips) {
  MeasureConfig config;
  config.measures = {"omega", "m3"};
  MeasureReport r = compute_report(input_of("petersen", petersen()), config);
  EXPECT_EQ(r.find("omega")->status, MeasureStatus::kExact);
  EXPECT_EQ(r.find("d")->status, MeasureStatus::kSkipped);
  // m3 needs mu3, which was not requested.
  EXPECT_EQ(r.find("m3")->status, MeasureStatus::kSkipped);
  EXPECT_FALSE(r.find("m3")->note.empty());
}

TEST(HarnessTest, JsonIsDeterministic) {
  std::vector<InputGraph> inputs = {input_of("petersen", petersen()),
                                    input_of("k33", k33())};
  MeasureConfig config;
  auto a = run_measures(inputs, config);
  config.threads = 2;
  auto b = run_measures(inputs, config);
  ASSERT_EQ(a.size(), 2u);
  EXPECT_EQ(a[0].id, "petersen");
  EXPECT_EQ(a[1].id, "k33");
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(report_to_json(a[i], false).dump(),
              report_to_json(b[i], false).dump());
  }
  nlohmann::json j = report_to_json(a[0], true);
  EXPECT_EQ(j["schema"], kReportSchema);
  EXPECT_TRUE(j.contains("timing"));
  EXPECT_FALSE(report_to_json(a[0], false).contains("timing"));
  EXPECT_EQ(j["measures"]["m2"]["value"], "3/5");
  EXPECT_EQ(j["measures"]["omega"]["value"], 2);
  EXPECT_EQ(j["measures"]["omega"]["status"], "exact");
}

TEST(HarnessTest, CsvProjection) {
  auto reports = run_measures({input_of("petersen", petersen())}, {});
  const std::string csv = reports_to_csv(reports);
  const std::string header = csv.substr(0, csv.find('\n'));
  EXPECT_EQ(header.rfind("id,n,m,bridgeless,bridgeless_status", 0), 0u);
  EXPECT_NE(csv.find("\"petersen\",10,15"), std::string::npos);
  EXPECT_NE(csv.find(",3/5,exact"), std::string::npos);
  EXPECT_EQ(csv.back(), '\n');
}

TEST(HarnessTest, BadInputsAreSkipped) {
  MultiGraph path(3, {{0, 1}, {1, 2}});
  MeasureReport r = compute_report(input_of("path", path), {});
  EXPECT_FALSE(r.input_error.empty());
  for (const MeasureValue& v : r.measures) {
    EXPECT_EQ(v.status, MeasureStatus::kSkipped);
  }
  MeasureReport e = compute_report(InputGraph{"broken", {}, "bad graph6"}, {});
  EXPECT_EQ(e.input_error, "bad graph6");
  auto v = verify_reports({r, e});
  EXPECT_EQ(v.find("witness_recheck")->graphs_tested, 0);
}

TEST(HarnessTest, BudgetMarksBounded) {
  MeasureConfig config;
  config.measures = {"F_c"};
  config.q_cap = 2;
  MeasureReport r = compute_report(input_of("petersen", petersen()), config);
  // 4 * 2 < 14, so the value is not certified.
  EXPECT_EQ(r.find("F_c")->status, MeasureStatus::kBounded);
  EXPECT_TRUE(r.consistent());
}

TEST(HarnessTest, VerifySuitePassesAndCorruptionIsCaught) {
  std::vector<InputGraph> inputs = small_bridgeless_inputs();
  inputs.push_back(input_of("flower:5", flower_snark(5)));
  auto reports = run_measures(inputs, {});
  VerificationReport v = verify_reports(reports);
  EXPECT_TRUE(v.passed());
  for (const TheoremEntry& e : v.entries) {
    EXPECT_TRUE(e.passed || e.observation) << e.id;
  }
  const TheoremEntry* unique = v.find("unique_snark_10");
  ASSERT_NE(unique, nullptr);
  // One of the 19 cubic graphs on 10 vertices has a bridge.
  EXPECT_EQ(unique->graphs_tested, 18);
  EXPECT_TRUE(unique->passed);
  EXPECT_GT(v.find("equality_d_r_rho")->graphs_tested, 0);

  // Damage the Petersen 2-factor witness.
  MeasureReport* p = nullptr;
  for (MeasureReport& r : reports) {
    if (r.n == 10 && r.exact("class") == Fraction(2, 1)) p = &r;
  }
  ASSERT_NE(p, nullptr);
  p->witnesses.two_factor->pop_back();
  VerificationReport bad = verify_reports(reports);
  EXPECT_FALSE(bad.passed());
  const TheoremEntry* w = bad.find("witness_recheck");
  ASSERT_FALSE(w->passed);
  ASSERT_EQ(w->failures.size(), 1u);
  EXPECT_EQ(w->failures[0].graph_id, p->id);
  EXPECT_TRUE(w->failures[0].witness.contains("edge_list"));
  EXPECT_TRUE(w->failures[0].witness["witnesses"].contains("two_factor"));
  nlohmann::json j = verification_to_json(bad);
  EXPECT_FALSE(j["passed"]);
}

TEST(HarnessTest, BridgedGraphsPassVerification) {
  std::vector<InputGraph> inputs;
  for (const MultiGraph& g : testing::cubic_corpus(10)) {
    if (!bridges(g).empty()) inputs.push_back(input_of("bridged", g));
  }
  ASSERT_EQ(inputs.size(), 1u);
  auto reports = run_measures(inputs, {});
  EXPECT_EQ(reports[0].exact("bridgeless"), Fraction(0, 1));
  VerificationReport v = verify_reports(reports);
  for (const TheoremEntry& e : v.entries) {
    // A single graph is not a complete corpus.
    if (e.id == "unique_snark_10") continue;
    EXPECT_TRUE(e.passed) << e.id;
  }
  // The flow extension bounds are stated for bridgeless graphs only.
  EXPECT_EQ(v.find("extension_bounds")->graphs_tested, 0);
}

TEST(HarnessTest, InconsistentValuesAreReported) {
  MeasureReport r = compute_report(input_of("petersen", petersen()), {});
  r.find("weak_oddness")->value = Fraction(4, 1);
  EXPECT_FALSE(consistency_violations(r).empty());
  VerificationReport v = verify_reports({r});
  EXPECT_FALSE(v.find("weak_oddness_at_most_oddness")->passed);
}

TEST(HarnessTest, RatioStatistics) {
  std::vector<InputGraph> inputs = small_bridgeless_inputs();
  MeasureConfig config;
  config.measures = {"omega", "r_f", "mu3"};
  auto reports = run_measures(inputs, config);
  RatioStat omega = ratio_stats(reports, "omega", 2);
  EXPECT_EQ(omega.value, Fraction(1, 5));
  EXPECT_EQ(omega.qualifying, 1);
  EXPECT_EQ(omega.label, "corpus lower bound");
  EXPECT_EQ(ratio_stats(reports, "r_f", 1).value, Fraction(1, 10));
  EXPECT_EQ(ratio_stats(reports, "mu3", 3).value, Fraction(3, 10));
  try {
    ratio_stats(reports, "omega", 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNoQualifyingGraph);
  }
}

}  // namespace
}  // namespace snark
