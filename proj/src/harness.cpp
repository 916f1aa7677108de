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

#include "snark/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <thread>

#include <fmt/format.h>

#include "snark/constructions.hpp"
#include "snark/graph6.hpp"
#include "snark/structure.hpp"

namespace snark {

const char* measure_status_name(MeasureStatus status) {
  switch (status) {
    case MeasureStatus::kExact:
      return "exact";
    case MeasureStatus::kBounded:
      return "bounded";
    case MeasureStatus::kSkipped:
      return "skipped";
  }
  return "?";
}

const std::vector<std::string>& measure_names() {
  static const std::vector<std::string> names = {
      "bridgeless",
      "girth",
      "cyclic_connectivity",
      "class",
      "hypohamiltonian",
      "d",
      "r",
      "rho",
      "r2",
      "omega",
      "weak_oddness",
      "gamma2",
      "mu2",
      "mu3",
      "m2",
      "m3",
      "excessive_index",
      "F",
      "F_c",
      "r_f",
      "phi3",
      "phi4",
      "phi5",
      "flow_critical",
  };
  return names;
}

const MeasureValue* MeasureReport::find(const std::string& name) const {
  for (const MeasureValue& v : measures) {
    if (v.name == name) return &v;
  }
  return nullptr;
}

MeasureValue* MeasureReport::find(const std::string& name) {
  for (MeasureValue& v : measures) {
    if (v.name == name) return &v;
  }
  return nullptr;
}

std::optional<Fraction> MeasureReport::exact(const std::string& name) const {
  const MeasureValue* v = find(name);
  if (v == nullptr || v->status != MeasureStatus::kExact) return std::nullopt;
  return v->value;
}

std::vector<InputGraph> load_graph6_inputs(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::kInvalidArgument,
                fmt::format("cannot open '{}'", path));
  }
  std::vector<InputGraph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    InputGraph input;
    input.id = fmt::format("{}:{}", path, out.size());
    try {
      input.graph = parse_graph6(line);
    } catch (const Error& e) {
      // A bad line becomes an error record; the rest of the file still runs.
      input.error = e.what();
    }
    out.push_back(std::move(input));
  }
  return out;
}

std::vector<InputGraph> load_builder_inputs(
    const std::vector<std::string>& names) {
  std::vector<InputGraph> out;
  for (const std::string& name : names) {
    out.push_back(InputGraph{name, build_named(name).graph(), ""});
  }
  return out;
}

namespace {

using Seconds = std::chrono::duration<double>;

Fraction whole(std::int64_t v) { return Fraction(v, 1); }

bool wants(const MeasureConfig& config, const std::string& name) {
  return config.measures.empty() || config.measures.count(name) > 0;
}

}  // namespace

MeasureReport compute_report(const InputGraph& input,
                             const MeasureConfig& config) {
  MeasureReport report;
  report.id = input.id;
  report.graph = input.graph;
  report.n = input.graph.num_vertices();
  report.m = input.graph.num_edges();
  for (const std::string& name : measure_names()) {
    MeasureValue slot;
    slot.name = name;
    report.measures.push_back(std::move(slot));
  }
  if (!input.error.empty()) {
    report.input_error = input.error;
    return report;
  }
  std::optional<CubicGraph> cubic;
  try {
    cubic = as_cubic(input.graph);
  } catch (const Error& e) {
    report.input_error = e.what();
    return report;
  }
  const CubicGraph& g = *cubic;

  auto budget = [&] {
    if (config.seconds_per_measure <= 0) {
      Budget b;
      b.max_nodes = config.node_budget;
      return b;
    }
    return Budget::with_seconds(config.node_budget, config.seconds_per_measure);
  };
  // Runs one measure; `fn` returns its exact value or marks it otherwise.
  auto run =
      [&](const std::string& name,
          const std::function<std::optional<Fraction>(MeasureValue&)>& fn) {
        if (!wants(config, name)) return;
        MeasureValue& slot = *report.find(name);
        const auto start = std::chrono::steady_clock::now();
        try {
          slot.status = MeasureStatus::kExact;
          std::optional<Fraction> v = fn(slot);
          if (slot.status == MeasureStatus::kExact) slot.value = v;
        } catch (const BudgetExhausted& e) {
          slot.status = MeasureStatus::kBounded;
          slot.value.reset();
          if (e.has_bound()) slot.value = whole(e.best_bound());
          slot.note = e.what();
        } catch (const Error& e) {
          slot.status = MeasureStatus::kSkipped;
          slot.value.reset();
          slot.note =
              fmt::format("{}: {}", error_kind_name(e.kind()), e.what());
        }
        slot.seconds =
            Seconds(std::chrono::steady_clock::now() - start).count();
      };
  auto exact = [&](const std::string& name) { return report.exact(name); };

  run("bridgeless",
      [&](MeasureValue&) { return whole(bridges(g).empty() ? 1 : 0); });
  run("girth", [&](MeasureValue&) { return whole(girth(g)); });
  run("cyclic_connectivity",
      [&](MeasureValue&) { return whole(cyclic_edge_connectivity(g)); });
  run("class", [&](MeasureValue&) {
    return whole(chromatic_index(g, nullptr, budget()) == 3 ? 1 : 2);
  });
  run("hypohamiltonian", [&](MeasureValue&) {
    return whole(
        hamiltonicity(g, budget()) == Hamiltonicity::kHypohamiltonian ? 1 : 0);
  });
  run("d", [&](MeasureValue&) {
    return whole(min_conflict_coloring(g, budget()).d);
  });
  run("r", [&](MeasureValue&) {
    ResistanceResult r = resistance(g, budget());
    report.witnesses.resistance = r.coloring;
    return whole(r.r);
  });
  run("rho",
      [&](MeasureValue&) { return whole(vertex_resistance(g, budget()).rho); });
  run("r2",
      [&](MeasureValue&) { return whole(max_2_colorable(g, budget()).r2); });
  run("omega", [&](MeasureValue&) {
    OddnessResult r = oddness(g, budget());
    report.witnesses.two_factor = r.witness.edges;
    return whole(r.value);
  });
  run("weak_oddness", [&](MeasureValue&) {
    OddnessResult r = weak_oddness(g, budget());
    report.witnesses.even_factor = r.witness.edges;
    return whole(r.value);
  });
  run("gamma2",
      [&](MeasureValue&) { return whole(gamma2(g, budget()).value); });
  run("mu2", [&](MeasureValue&) { return whole(mu_k(g, 2, budget()).value); });
  run("mu3", [&](MeasureValue&) { return whole(mu_k(g, 3, budget()).value); });
  auto coverage = [&](const char* mu) {
    return [&, mu](MeasureValue& slot) -> std::optional<Fraction> {
      std::optional<Fraction> v = exact(mu);
      if (!v) {
        slot.status = MeasureStatus::kSkipped;
        slot.note = fmt::format("needs exact {}", mu);
        return std::nullopt;
      }
      return Fraction(report.m - v->num, report.m);
    };
  };
  run("m2", coverage("mu2"));
  run("m3", coverage("mu3"));
  run("excessive_index", [&](MeasureValue& slot) -> std::optional<Fraction> {
    ExcessiveIndexResult r = excessive_index(g, config.excessive_cap, budget());
    if (!r.value) {
      slot.status = MeasureStatus::kBounded;
      slot.note = fmt::format("more than {} perfect matchings needed", r.cap);
      return std::nullopt;
    }
    return whole(*r.value);
  });
  run("F", [&](MeasureValue&) { return whole(flow_number(g, budget())); });
  run("F_c", [&](MeasureValue& slot) -> std::optional<Fraction> {
    CircularFlowResult r = circular_flow_number(g, config.q_cap, budget());
    if (r.witness) {
      report.witnesses.circular_flow = r.witness;
      report.witnesses.circular_value = r.value;
    }
    if (!r.exact) {
      slot.status = MeasureStatus::kBounded;
      slot.value = r.value;
      slot.note =
          fmt::format("denominator cap {} does not cover |E|", config.q_cap);
    }
    return r.value;
  });
  // F_c <= F: an exhausted F_c search still has the integer bound.
  if (MeasureValue* fc = report.find("F_c");
      fc->status == MeasureStatus::kBounded && !fc->value && exact("F")) {
    fc->value = exact("F");
  }
  run("r_f", [&](MeasureValue&) {
    FlowResistanceResult r = flow_resistance(g, budget());
    report.witnesses.flow_resistance = r.witness;
    return whole(r.value);
  });
  run("phi3",
      [&](MeasureValue&) { return whole(phi_plus(g, 3, budget()).value); });
  run("phi4",
      [&](MeasureValue&) { return whole(phi_plus(g, 4, budget()).value); });
  run("phi5",
      [&](MeasureValue&) { return whole(phi_plus(g, 5, budget()).value); });
  run("flow_critical", [&](MeasureValue&) {
    try {
      return whole(is_4_flow_critical(g, budget()).critical ? 1 : 0);
    } catch (const Error& e) {
      // 3-edge-colourable graphs are not critical by definition.
      if (e.kind() == ErrorKind::kNotClass2) return whole(0);
      throw;
    }
  });
  report.violations = consistency_violations(report);
  return report;
}

std::vector<MeasureReport> run_measures(const std::vector<InputGraph>& inputs,
                                        const MeasureConfig& config) {
  std::vector<MeasureReport> out(inputs.size());
  const int workers = std::max(
      1, std::min<int>(config.threads, static_cast<int>(inputs.size())));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < inputs.size(); i = next++) {
      out[i] = compute_report(inputs[i], config);
    }
  };
  if (workers == 1) {
    work();
    return out;
  }
  std::vector<std::thread> pool;
  for (int t = 0; t < workers; ++t) pool.emplace_back(work);
  for (std::thread& t : pool) t.join();
  return out;
}

namespace {

// Outcome of one theorem instance: not applicable (operands missing), pass,
// or a failure message.
struct Outcome {
  bool applicable = false;
  std::string failure;

  static Outcome skip() { return {}; }
  static Outcome check(bool ok, std::string message) {
    return Outcome{true, ok ? "" : std::move(message)};
  }
};

struct TheoremCheck {
  const char* id;
  const char* statement;
  bool observation;
  std::function<Outcome(const MeasureReport&)> evaluate;
};

using Values = std::vector<std::optional<Fraction>>;

bool all_present(const Values& values) {
  return std::all_of(values.begin(), values.end(),
                     [](const auto& v) { return v.has_value(); });
}

std::string show(const Fraction& f) {
  return f.den == 1 ? fmt::format("{}", f.num)
                    : fmt::format("{}/{}", f.num, f.den);
}

bool is_snark(const MeasureReport& r) {
  auto cls = r.exact("class");
  auto gi = r.exact("girth");
  auto cc = r.exact("cyclic_connectivity");
  return cls && gi && cc && cls->num == 2 && gi->num >= 5 &&
         (cc->num >= 4 || cc->num == kNoCyclicCut);
}

const std::vector<TheoremCheck>& theorem_checks() {
  static const std::vector<TheoremCheck> checks = {
      {"equality_d_r_rho", "d = r = rho", false,
       [](const MeasureReport& r) {
         Values v{r.exact("d"), r.exact("r"), r.exact("rho")};
         if (!all_present(v)) return Outcome::skip();
         return Outcome::check(*v[0] == *v[1] && *v[1] == *v[2],
                               fmt::format("d={} r={} rho={}", show(*v[0]),
                                           show(*v[1]), show(*v[2])));
       }},
      {"weak_oddness_at_most_oddness", "weak oddness <= oddness", false,
       [](const MeasureReport& r) {
         Values v{r.exact("weak_oddness"), r.exact("omega")};
         if (!all_present(v)) return Outcome::skip();
         return Outcome::check(
             *v[0] <= *v[1],
             fmt::format("weak_oddness={} omega={}", show(*v[0]), show(*v[1])));
       }},
      {"oddness_at_least_d", "omega >= d, with equality when d <= 2", false,
       [](const MeasureReport& r) {
         Values v{r.exact("omega"), r.exact("d")};
         if (!all_present(v)) return Outcome::skip();
         const auto w = v[0]->num, d = v[1]->num;
         return Outcome::check(w >= d && (d > 2 || w == d),
                               fmt::format("omega={} d={}", w, d));
       }},
      {"oddness_gamma_mu_chain",
       "class 2: omega <= 2 gamma2 <= mu3 - 1, 3 omega <= 2 mu3, mu3 >= 3",
       false,
       [](const MeasureReport& r) {
         Values v{r.exact("class"), r.exact("omega"), r.exact("gamma2"),
                  r.exact("mu3")};
         if (!all_present(v) || v[0]->num != 2) return Outcome::skip();
         const auto w = v[1]->num, g2 = v[2]->num, mu3 = v[3]->num;
         return Outcome::check(
             w <= 2 * g2 && 2 * g2 <= mu3 - 1 && 3 * w <= 2 * mu3 && mu3 >= 3,
             fmt::format("omega={} gamma2={} mu3={}", w, g2, mu3));
       }},
      {"mu2_identity", "mu2 = gamma2 + |E| / 3", false,
       [](const MeasureReport& r) {
         Values v{r.exact("mu2"), r.exact("gamma2")};
         if (!all_present(v)) return Outcome::skip();
         return Outcome::check(
             3 * v[0]->num == 3 * v[1]->num + r.m,
             fmt::format("mu2={} gamma2={} |E|={}", v[0]->num, v[1]->num, r.m));
       }},
      {"coverage_bounds", "bridgeless: m2 >= 3/5 and m3 >= 27/35", false,
       [](const MeasureReport& r) {
         Values v{r.exact("bridgeless"), r.exact("m2"), r.exact("m3")};
         if (!all_present(v) || v[0]->num != 1) return Outcome::skip();
         return Outcome::check(
             *v[1] >= Fraction(3, 5) && *v[2] >= Fraction(27, 35),
             fmt::format("m2={} m3={}", show(*v[1]), show(*v[2])));
       }},
      {"r2_bounds", "r/2 <= r2 <= min(2r/3, omega/2); r2 = 1 iff r = 2", false,
       [](const MeasureReport& r) {
         Values v{r.exact("r2"), r.exact("r"), r.exact("omega")};
         if (!all_present(v)) return Outcome::skip();
         const auto r2 = v[0]->num, res = v[1]->num, w = v[2]->num;
         return Outcome::check(res <= 2 * r2 && 3 * r2 <= 2 * res &&
                                   2 * r2 <= w && ((r2 == 1) == (res == 2)),
                               fmt::format("r2={} r={} omega={}", r2, res, w));
       }},
      {"resistance_three_weak_oddness", "bridgeless, r = 3: weak oddness 4",
       false,
       [](const MeasureReport& r) {
         Values v{r.exact("bridgeless"), r.exact("r"), r.exact("weak_oddness")};
         if (!all_present(v) || v[0]->num != 1 || v[1]->num != 3) {
           return Outcome::skip();
         }
         return Outcome::check(v[2]->num == 4,
                               fmt::format("weak_oddness={}", v[2]->num));
       }},
      {"flow_resistance_bound", "bridgeless: r_f <= gamma2", false,
       [](const MeasureReport& r) {
         Values v{r.exact("bridgeless"), r.exact("r_f"), r.exact("gamma2")};
         if (!all_present(v) || v[0]->num != 1) return Outcome::skip();
         return Outcome::check(
             v[1]->num <= v[2]->num,
             fmt::format("r_f={} gamma2={}", v[1]->num, v[2]->num));
       }},
      {"class1_measures_vanish",
       "class 1: d, r, rho, r2, omega, weak oddness, r_f and phi4 are 0", false,
       [](const MeasureReport& r) {
         auto cls = r.exact("class");
         if (!cls || cls->num != 1) return Outcome::skip();
         std::string bad;
         for (const char* name :
              {"d", "r", "rho", "r2", "omega", "weak_oddness", "r_f", "phi4"}) {
           auto v = r.exact(name);
           if (v && v->num != 0) bad += fmt::format("{}={} ", name, v->num);
         }
         return Outcome::check(bad.empty(), bad);
       }},
      {"flow_characterization",
       "class 1 iff F <= 4 iff F_c <= 4; F = ceil(F_c); F_c not in (3, 4); "
       "bridgeless class 2 iff r_f > 0",
       false,
       [](const MeasureReport& r) {
         auto cls = r.exact("class");
         if (!cls) return Outcome::skip();
         const bool class1 = cls->num == 1;
         bool applicable = false;
         std::string bad;
         if (auto f = r.exact("F")) {
           applicable = true;
           if ((f->num <= 4) != class1) bad += fmt::format("F={} ", f->num);
         }
         if (auto fc = r.exact("F_c")) {
           applicable = true;
           if ((*fc <= whole(4)) != class1) bad += "F_c vs class ";
           if (*fc > whole(3) && *fc < whole(4)) bad += "F_c in (3,4) ";
           if (auto f = r.exact("F")) {
             const auto ceil = (fc->num + fc->den - 1) / fc->den;
             if (ceil != f->num) bad += "F != ceil(F_c) ";
           }
         }
         auto rf = r.exact("r_f");
         auto bridgeless = r.exact("bridgeless");
         if (rf && bridgeless && bridgeless->num == 1) {
           applicable = true;
           if ((rf->num == 0) != class1) bad += fmt::format("r_f={} ", rf->num);
         }
         if (!applicable) return Outcome::skip();
         return Outcome::check(bad.empty(), bad);
       }},
      {"extension_bounds",
       "phi3 <= floor(n/4); phi4 <= min(ceil(floor(n/5)/2), omega/2, r_f); "
       "class 2: phi5 <= min(omega/2 - 1, r_f - 1); bridgeless graphs",
       false,
       [](const MeasureReport& r) {
         auto bridgeless = r.exact("bridgeless");
         if (!bridgeless || bridgeless->num != 1) return Outcome::skip();
         bool applicable = false;
         std::string bad;
         const int n = r.n;
         if (auto p3 = r.exact("phi3")) {
           applicable = true;
           if (p3->num > n / 4) bad += fmt::format("phi3={} ", p3->num);
         }
         if (auto p4 = r.exact("phi4")) {
           applicable = true;
           if (p4->num > (n / 5 + 1) / 2)
             bad += fmt::format("phi4={} ", p4->num);
           auto w = r.exact("omega");
           if (w && 2 * p4->num > w->num) bad += "phi4 > omega/2 ";
           auto rf = r.exact("r_f");
           if (rf && p4->num > rf->num) bad += "phi4 > r_f ";
         }
         auto p5 = r.exact("phi5");
         auto cls = r.exact("class");
         if (p5 && cls && cls->num == 2) {
           applicable = true;
           auto w = r.exact("omega");
           if (w && 2 * p5->num > w->num - 2) bad += "phi5 > omega/2 - 1 ";
           auto rf = r.exact("r_f");
           if (rf && p5->num > rf->num - 1) bad += "phi5 > r_f - 1 ";
         }
         if (!applicable) return Outcome::skip();
         return Outcome::check(bad.empty(), bad);
       }},
      {"snark_order_bound", "snarks: n >= 10 floor((d + 1) / 2)", false,
       [](const MeasureReport& r) {
         auto d = r.exact("d");
         if (!d || !is_snark(r)) return Outcome::skip();
         return Outcome::check(r.n >= 10 * ((d->num + 1) / 2),
                               fmt::format("n={} d={}", r.n, d->num));
       }},
      {"hypohamiltonian_resistance", "hypohamiltonian: r = omega = 2", false,
       [](const MeasureReport& r) {
         Values v{r.exact("hypohamiltonian"), r.exact("r"), r.exact("omega")};
         if (!all_present(v) || v[0]->num != 1) return Outcome::skip();
         return Outcome::check(
             v[1]->num == 2 && v[2]->num == 2,
             fmt::format("r={} omega={}", v[1]->num, v[2]->num));
       }},
      {"critical_is_class2", "4-flow-critical graphs are class 2", false,
       [](const MeasureReport& r) {
         Values v{r.exact("flow_critical"), r.exact("class")};
         if (!all_present(v) || v[0]->num != 1) return Outcome::skip();
         return Outcome::check(v[1]->num == 2, "critical but class 1");
       }},
      {"hypohamiltonian_mu3", "hypohamiltonian class 2: mu3 = 3", true,
       [](const MeasureReport& r) {
         Values v{r.exact("hypohamiltonian"), r.exact("class"), r.exact("mu3")};
         if (!all_present(v) || v[0]->num != 1 || v[1]->num != 2) {
           return Outcome::skip();
         }
         return Outcome::check(v[2]->num == 3,
                               fmt::format("mu3={}", v[2]->num));
       }},
  };
  return checks;
}

nlohmann::json witnesses_to_json(const MeasureReport& r) {
  nlohmann::json w = nlohmann::json::object();
  if (r.witnesses.resistance)
    w["resistance_coloring"] = r.witnesses.resistance->color;
  if (r.witnesses.two_factor) w["two_factor"] = *r.witnesses.two_factor;
  if (r.witnesses.even_factor) w["even_factor"] = *r.witnesses.even_factor;
  if (r.witnesses.flow_resistance) {
    std::vector<int> values;
    for (BooleColor b : r.witnesses.flow_resistance->value) {
      values.push_back(index_of(b));
    }
    w["klein_flow"] = values;
  }
  if (r.witnesses.circular_flow) {
    w["circular_flow"] = {{"p", r.witnesses.circular_value.num},
                          {"q", r.witnesses.circular_value.den},
                          {"values", r.witnesses.circular_flow->value}};
  }
  return w;
}

TheoremEntry make_entry(std::string id, std::string statement) {
  TheoremEntry e;
  e.id = std::move(id);
  e.statement = std::move(statement);
  return e;
}

nlohmann::json failure_witness(const MeasureReport& r) {
  return {{"id", r.id},
          {"edge_list", write_edge_list(r.graph)},
          {"witnesses", witnesses_to_json(r)}};
}

}  // namespace

std::vector<std::string> consistency_violations(const MeasureReport& report) {
  std::vector<std::string> out;
  for (const TheoremCheck& check : theorem_checks()) {
    if (check.observation) continue;
    Outcome o = check.evaluate(report);
    if (o.applicable && !o.failure.empty()) {
      out.push_back(fmt::format("{}: {}", check.id, o.failure));
    }
  }
  return out;
}

std::vector<std::string> witness_problems(const MeasureReport& report) {
  std::vector<std::string> out;
  const MultiGraph& g = report.graph;
  const ReportWitnesses& w = report.witnesses;
  if (w.resistance) {
    if (static_cast<int>(w.resistance->color.size()) != g.num_edges() ||
        !is_proper(g, *w.resistance)) {
      out.push_back("resistance colouring is not proper");
    } else if (auto r = report.exact("r");
               r && w.resistance->count(0) != r->num) {
      out.push_back("resistance colouring class 0 size differs from r");
    }
  }
  auto check_factor = [&](const std::vector<EdgeId>& edges, bool two_factor,
                          const char* measure) {
    try {
      EvenFactor f = describe_factor(g, edges);
      if (two_factor && !f.is_two_factor) {
        out.push_back(fmt::format("{} witness is not a 2-factor", measure));
      }
      auto v = report.exact(measure);
      if (v && f.odd_count() != v->num) {
        out.push_back(fmt::format("{} witness has {} odd components", measure,
                                  f.odd_count()));
      }
    } catch (const Error& e) {
      out.push_back(fmt::format("{} witness: {}", measure, e.what()));
    }
  };
  if (w.two_factor) check_factor(*w.two_factor, true, "omega");
  if (w.even_factor) check_factor(*w.even_factor, false, "weak_oddness");
  if (w.flow_resistance) {
    FlowCheck c = verify_klein_flow(g, *w.flow_resistance, false);
    if (!c.ok) out.push_back("Klein flow: " + c.reason);
    auto v = report.exact("r_f");
    if (v && w.flow_resistance->zero_count() != v->num) {
      out.push_back("Klein flow zero count differs from r_f");
    }
  }
  if (w.circular_flow) {
    const Fraction& f = w.circular_value;
    FlowCheck c = verify_flow(
        g, *w.circular_flow,
        FlowSpec::circular(static_cast<int>(f.num), static_cast<int>(f.den)));
    if (!c.ok) out.push_back("circular flow: " + c.reason);
  }
  return out;
}

nlohmann::json report_to_json(const MeasureReport& report, bool with_timing) {
  nlohmann::json j;
  j["schema"] = kReportSchema;
  j["id"] = report.id;
  j["n"] = report.n;
  j["m"] = report.m;
  if (!report.input_error.empty()) j["input_error"] = report.input_error;
  nlohmann::json measures = nlohmann::json::object();
  nlohmann::json timing = nlohmann::json::object();
  for (const MeasureValue& v : report.measures) {
    nlohmann::json entry;
    entry["status"] = measure_status_name(v.status);
    if (v.value) {
      entry["value"] = v.value->den == 1 ? nlohmann::json(v.value->num)
                                         : nlohmann::json(show(*v.value));
    }
    if (!v.note.empty()) entry["note"] = v.note;
    measures[v.name] = entry;
    if (v.status != MeasureStatus::kSkipped || !v.note.empty()) {
      timing[v.name] = v.seconds;
    }
  }
  j["measures"] = measures;
  j["consistent"] = report.consistent();
  j["violations"] = report.violations;
  j["witnesses"] = witnesses_to_json(report);
  if (with_timing) j["timing"] = timing;
  return j;
}

std::string reports_to_csv(const std::vector<MeasureReport>& reports) {
  std::string out = "id,n,m";
  for (const std::string& name : measure_names()) {
    out += fmt::format(",{0},{0}_status", name);
  }
  out += ",consistent\n";
  for (const MeasureReport& r : reports) {
    out += fmt::format("\"{}\",{},{}", r.id, r.n, r.m);
    for (const MeasureValue& v : r.measures) {
      out += fmt::format(",{},{}", v.value ? show(*v.value) : "",
                         measure_status_name(v.status));
    }
    out += r.consistent() ? ",1\n" : ",0\n";
  }
  return out;
}

bool VerificationReport::passed() const {
  return std::all_of(entries.begin(), entries.end(), [](const TheoremEntry& e) {
    return e.observation || e.passed;
  });
}

const TheoremEntry* VerificationReport::find(const std::string& id) const {
  for (const TheoremEntry& e : entries) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

VerificationReport verify_reports(const std::vector<MeasureReport>& reports) {
  VerificationReport out;
  for (const TheoremCheck& check : theorem_checks()) {
    TheoremEntry entry = make_entry(check.id, check.statement);
    entry.observation = check.observation;
    for (const MeasureReport& r : reports) {
      Outcome o = check.evaluate(r);
      if (!o.applicable) continue;
      ++entry.graphs_tested;
      if (!o.failure.empty()) {
        entry.passed = false;
        entry.failures.push_back({r.id, o.failure, failure_witness(r)});
      }
    }
    out.entries.push_back(std::move(entry));
  }

  TheoremEntry witnesses = make_entry(
      "witness_recheck", "stored witnesses re-validate against the values");
  for (const MeasureReport& r : reports) {
    if (!r.input_error.empty()) continue;
    ++witnesses.graphs_tested;
    std::vector<std::string> problems = witness_problems(r);
    if (!problems.empty()) {
      witnesses.passed = false;
      std::string message;
      for (const std::string& p : problems) message += p + "; ";
      witnesses.failures.push_back({r.id, message, failure_witness(r)});
    }
  }
  out.entries.push_back(std::move(witnesses));

  // Corpus facts; only meaningful on complete, duplicate-free corpora of the
  // given orders.
  TheoremEntry no_snark =
      make_entry("no_snark_12_14_16", "no snark on 12, 14 or 16 vertices");
  TheoremEntry unique10 = make_entry(
      "unique_snark_10", "exactly one snark on 10 vertices (girth 5)");
  int snarks10 = 0;
  for (const MeasureReport& r : reports) {
    const bool known =
        r.exact("class") && r.exact("girth") && r.exact("cyclic_connectivity");
    if (!known) continue;
    if (r.n == 12 || r.n == 14 || r.n == 16) {
      ++no_snark.graphs_tested;
      if (is_snark(r)) {
        no_snark.passed = false;
        no_snark.failures.push_back({r.id, "snark found", failure_witness(r)});
      }
    }
    if (r.n == 10) {
      ++unique10.graphs_tested;
      // A cubic graph on 10 vertices with girth 5 is the Petersen graph.
      if (is_snark(r)) ++snarks10;
    }
  }
  if (unique10.graphs_tested > 0 && snarks10 != 1) {
    unique10.passed = false;
    unique10.failures.push_back(
        {"", fmt::format("{} snarks on 10 vertices", snarks10), {}});
  }
  out.entries.push_back(std::move(no_snark));
  out.entries.push_back(std::move(unique10));
  return out;
}

VerificationReport verify_suite(const std::vector<InputGraph>& inputs,
                                const MeasureConfig& config) {
  return verify_reports(run_measures(inputs, config));
}

nlohmann::json verification_to_json(const VerificationReport& report) {
  nlohmann::json j;
  j["schema"] = kReportSchema;
  j["passed"] = report.passed();
  nlohmann::json entries = nlohmann::json::array();
  for (const TheoremEntry& e : report.entries) {
    nlohmann::json entry = {{"id", e.id},
                            {"statement", e.statement},
                            {"graphs_tested", e.graphs_tested},
                            {"passed", e.passed},
                            {"observation", e.observation}};
    nlohmann::json failures = nlohmann::json::array();
    for (const TheoremFailure& f : e.failures) {
      failures.push_back({{"graph", f.graph_id},
                          {"message", f.message},
                          {"witness", f.witness}});
    }
    entry["failures"] = failures;
    entries.push_back(entry);
  }
  j["entries"] = entries;
  return j;
}

RatioStat ratio_stats(const std::vector<MeasureReport>& reports,
                      const std::string& tau, int k) {
  RatioStat out;
  bool found = false;
  for (const MeasureReport& r : reports) {
    auto v = r.exact(tau);
    if (!v || r.n == 0 || *v < whole(k)) continue;
    ++out.qualifying;
    Fraction ratio(k, r.n);
    if (!found || ratio > out.value) {
      out.value = ratio;
      out.graph_id = r.id;
      found = true;
    }
  }
  if (!found) {
    throw Error(ErrorKind::kNoQualifyingGraph,
                fmt::format("no graph with exact {} >= {}", tau, k));
  }
  return out;
}

}  // namespace snark
