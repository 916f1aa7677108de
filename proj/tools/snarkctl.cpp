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

// snarkctl: build graphs, compute measures, verify theorem instances and
// corpus statistics.
//
// Exit codes: 0 success, 1 check failure, 2 input error, 3 budget
// exhaustion in a required measure.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <CLI11.hpp>

#include "snark/constructions.hpp"
#include "snark/graph6.hpp"
#include "snark/harness.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBudget = 3;

struct InputFlags {
  std::vector<std::string> files;
  std::vector<std::string> builders;
};

void add_input_flags(CLI::App* app, InputFlags* flags) {
  app->add_option("--input", flags->files, "graph6 file(s)");
  app->add_option("--builder", flags->builders, "builder name(s)");
}

std::vector<snark::InputGraph> load_inputs(const InputFlags& flags) {
  std::vector<snark::InputGraph> inputs;
  for (const std::string& path : flags.files) {
    auto part = snark::load_graph6_inputs(path);
    inputs.insert(inputs.end(), part.begin(), part.end());
  }
  auto built = snark::load_builder_inputs(flags.builders);
  inputs.insert(inputs.end(), built.begin(), built.end());
  if (inputs.empty()) {
    throw snark::Error(snark::ErrorKind::kInvalidArgument,
                       "no input: pass --input or --builder");
  }
  return inputs;
}

// "nodes=<int>,seconds=<float>" with either part optional.
void apply_budget_spec(const std::string& spec, snark::MeasureConfig* config) {
  std::stringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw snark::Error(snark::ErrorKind::kInvalidArgument,
                         "budget item without '=': " + item);
    }
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    try {
      if (key == "nodes") {
        config->node_budget = static_cast<std::uint64_t>(std::stod(value));
      } else if (key == "seconds") {
        config->seconds_per_measure = std::stod(value);
      } else {
        throw snark::Error(snark::ErrorKind::kInvalidArgument,
                           "unknown budget key: " + key);
      }
    } catch (const std::logic_error&) {
      throw snark::Error(snark::ErrorKind::kInvalidArgument,
                         "bad budget value: " + item);
    }
  }
}

void apply_measure_list(const std::string& list, snark::MeasureConfig* config) {
  if (list == "all") return;
  std::stringstream in(list);
  std::string name;
  const auto& known = snark::measure_names();
  while (std::getline(in, name, ',')) {
    if (std::find(known.begin(), known.end(), name) == known.end()) {
      throw snark::Error(snark::ErrorKind::kInvalidArgument,
                         "unknown measure: " + name);
    }
    config->measures.insert(name);
  }
  // Coverage fractions are derived from the mu values.
  if (config->measures.count("m2")) config->measures.insert("mu2");
  if (config->measures.count("m3")) config->measures.insert("mu3");
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) {
    throw snark::Error(snark::ErrorKind::kInvalidArgument,
                       "cannot write " + path);
  }
  out << text;
}

bool any_bounded(const std::vector<snark::MeasureReport>& reports,
                 const snark::MeasureConfig& config) {
  for (const auto& r : reports) {
    for (const auto& v : r.measures) {
      const bool requested =
          config.measures.empty() || config.measures.count(v.name);
      if (requested && v.status == snark::MeasureStatus::kBounded) return true;
    }
  }
  return false;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Measures of edge-uncolourability of cubic graphs"};
  app.require_subcommand(1);

  auto* construct = app.add_subcommand("construct", "emit a built graph");
  std::string construct_name;
  std::string construct_format = "g6";
  construct->add_option("name", construct_name, "builder name")->required();
  construct->add_option("--format", construct_format, "g6 or edgelist")
      ->check(CLI::IsMember({"g6", "edgelist"}));

  snark::MeasureConfig config;
  std::string measure_list = "all";
  std::string budget_spec;
  std::string output_path;

  auto* measures = app.add_subcommand("measures", "compute measure reports");
  InputFlags measure_inputs;
  add_input_flags(measures, &measure_inputs);
  std::string format = "json";
  bool timing = false;
  measures->add_option("--measures", measure_list, "comma list or 'all'");
  measures->add_option("--budget", budget_spec,
                       "nodes=<n>,seconds=<s> per measure per graph");
  measures->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  measures->add_flag("--timing", timing, "include wall times in JSON");
  measures->add_option("--q-cap", config.q_cap, "F_c denominator cap");
  measures->add_option("--threads", config.threads, "graph-level workers");
  measures->add_option("--output", output_path, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "check theorem instances");
  InputFlags verify_inputs;
  add_input_flags(verify, &verify_inputs);
  std::string suite = "paper";
  std::string report_path;
  verify->add_option("--suite", suite, "theorem suite")
      ->check(CLI::IsMember({"paper"}));
  verify->add_option("--measures", measure_list, "comma list or 'all'");
  verify->add_option("--budget", budget_spec, "nodes=<n>,seconds=<s>");
  verify->add_option("--threads", config.threads, "graph-level workers");
  verify->add_option("--report", report_path, "JSON report path");

  auto* stats = app.add_subcommand("stats", "corpus ratio k / n");
  InputFlags stats_inputs;
  add_input_flags(stats, &stats_inputs);
  std::string tau;
  int k = 1;
  stats->add_option("--tau", tau, "measure name")->required();
  stats->add_option("--k", k, "threshold")->required();
  stats->add_option("--budget", budget_spec, "nodes=<n>,seconds=<s>");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (!budget_spec.empty()) apply_budget_spec(budget_spec, &config);

    if (*construct) {
      snark::CubicGraph g = snark::build_named(construct_name);
      std::cout << (construct_format == "g6" ? snark::write_graph6(g) + "\n"
                                             : snark::write_edge_list(g));
      return kExitOk;
    }

    if (*measures) {
      apply_measure_list(measure_list, &config);
      auto reports = snark::run_measures(load_inputs(measure_inputs), config);
      if (format == "csv") {
        write_output(output_path, snark::reports_to_csv(reports));
      } else {
        nlohmann::json all = nlohmann::json::array();
        for (const auto& r : reports) {
          all.push_back(snark::report_to_json(r, timing));
        }
        write_output(output_path, all.dump(2) + "\n");
      }
      bool consistent = true;
      for (const auto& r : reports) {
        if (!r.input_error.empty()) {
          std::cerr << fmt::format("warning: {} skipped: {}\n", r.id,
                                   r.input_error);
        }
        for (const auto& v : r.violations) {
          std::cerr << fmt::format("inconsistent {}: {}\n", r.id, v);
          consistent = false;
        }
      }
      if (!consistent) return kExitCheckFailed;
      return any_bounded(reports, config) ? kExitBudget : kExitOk;
    }

    if (*verify) {
      apply_measure_list(measure_list, &config);
      auto reports = snark::run_measures(load_inputs(verify_inputs), config);
      snark::VerificationReport v = snark::verify_reports(reports);
      const std::string text = snark::verification_to_json(v).dump(2) + "\n";
      if (!report_path.empty()) write_output(report_path, text);
      for (const auto& e : v.entries) {
        std::cout << fmt::format(
            "{:<32} {:>5} graphs  {}\n", e.id, e.graphs_tested,
            e.observation ? (e.passed ? "observed" : "observation differs")
                          : (e.passed ? "pass" : "FAIL"));
      }
      return v.passed() ? kExitOk : kExitCheckFailed;
    }

    if (*stats) {
      config.measures = {tau};
      if (tau == "m2") config.measures.insert("mu2");
      if (tau == "m3") config.measures.insert("mu3");
      auto reports = snark::run_measures(load_inputs(stats_inputs), config);
      snark::RatioStat s = snark::ratio_stats(reports, tau, k);
      nlohmann::json j = {
          {"tau", tau},
          {"k", k},
          {"value", fmt::format("{}/{}", s.value.num, s.value.den)},
          {"graph", s.graph_id},
          {"qualifying", s.qualifying},
          {"label", s.label}};
      std::cout << j.dump(2) << "\n";
      return kExitOk;
    }
  } catch (const snark::BudgetExhausted& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return kExitBudget;
  } catch (const snark::Error& e) {
    std::cerr << snark::error_kind_name(e.kind()) << ": " << e.what() << "\n";
    return e.kind() == snark::ErrorKind::kNoQualifyingGraph ? kExitCheckFailed
                                                            : kExitInputError;
  }
  return kExitOk;
}
