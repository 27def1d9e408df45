// Copyright 2026 The pdcover Authors.
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

#include <chrono>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "pdcover/gen.hpp"
#include "pdcover/io.hpp"

namespace {

using pdcover::io::Instance;
using Json = pdcover::io::Json;

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitInput = 2;

struct SolveOutput {
  Json json;
  pdcover::Rational cost;
  pdcover::Rational dual;
  bool feasible = true;
  std::string violated;
  Json certificate;
};

std::string approx(const pdcover::Rational& r) {
  if (r.is_integer()) return r.str();
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", r.to_double());
  return r.str() + " (" + buf + ")";
}

SolveOutput run_plain(const Instance& inst, bool raw, bool with_cert, std::size_t budget) {
  const pdcover::GreedySystem& sys = *inst.plain;
  pdcover::TruncatedSystem tr =
      raw ? pdcover::TruncatedSystem::raw(sys) : pdcover::truncate(sys);
  pdcover::RunResult run = pdcover::solve_truncated(tr);
  SolveOutput out;
  std::optional<pdcover::Certificate> cert;
  if (with_cert) cert = pdcover::build_certificate(run, tr, budget);
  out.json = pdcover::io::run_result_json(run, tr, cert, inst.element_names);
  if (cert) out.certificate = out.json["certificate"];
  out.cost = run.primal_cost;
  out.dual = run.dual_value;
  auto feas = pdcover::check_feasibility(sys, run.x, budget);
  if (!feas.feasible) {
    out.feasible = false;
    Json row = Json::array();
    for (pdcover::ElementId e : feas.violated_row->support())
      row.push_back(inst.element_names[e]);
    out.violated = row.dump();
  }
  return out;
}

SolveOutput run_product(const Instance& inst, bool raw, bool cleanup_phase, bool with_cert,
                        std::size_t budget) {
  const pdcover::ProductSystem& ps = *inst.product;
  pdcover::ProductTruncation tr =
      raw ? pdcover::ProductTruncation::raw(ps) : pdcover::ProductTruncation::truncate(ps);
  pdcover::ProductRunResult run = pdcover::revised_solve_truncated(tr, cleanup_phase, budget);
  SolveOutput out;
  std::optional<pdcover::WitnessReport> witness;
  std::optional<pdcover::ProductCertificate> cert;
  if (with_cert) {
    witness = pdcover::witness_cover_diagnostics(tr, run, budget);
    cert = pdcover::build_product_certificate(run, *witness, tr, budget);
  }
  out.json = pdcover::io::product_run_json(run, tr, witness, cert, inst.element_names);
  if (cert) out.certificate = out.json["certificate"];
  out.cost = run.primal_cost;
  out.dual = run.dual_value;
  auto feas = pdcover::check_feasibility(ps, run.x, budget);
  if (!feas.feasible) {
    out.feasible = false;
    Json row = Json::array();
    for (pdcover::ElementId e : feas.violated_row->support())
      row.push_back(inst.element_names[e]);
    out.violated = row.dump();
  }
  return out;
}

// nullopt when the instance's box exceeds the enumeration budget; the
// report then shows "-" in the opt column.
std::optional<pdcover::OracleResult> oracle_for(const Instance& inst, std::size_t budget) {
  try {
    return inst.is_product() ? pdcover::exact_opt(*inst.product, budget)
                             : pdcover::exact_opt(*inst.plain, budget);
  } catch (const pdcover::BudgetExceeded&) {
    return std::nullopt;
  }
}

int cmd_solve(const std::string& path, bool no_cleanup, bool raw, bool certificate, bool compare,
              bool as_json, std::size_t budget) {
  Instance inst = pdcover::io::load_instance(path);
  SolveOutput out = inst.is_product()
                        ? run_product(inst, raw, !no_cleanup, certificate || compare, budget)
                        : run_plain(inst, raw, certificate || compare, budget);
  std::optional<pdcover::Rational> ratio;
  bool oracle_skipped = false;
  if (compare) {
    auto opt = oracle_for(inst, budget);
    if (opt) {
      if (opt->feasible && opt->opt_value.sign() > 0) ratio = out.cost / opt->opt_value;
      out.json["oracle"] = pdcover::io::oracle_json(*opt, inst.element_names);
      if (ratio) out.json["ratio"] = pdcover::io::rational_out(*ratio);
    } else {
      oracle_skipped = true;
      out.json["oracle"] = nullptr;
    }
  }
  if (as_json) {
    std::cout << out.json.dump(2) << "\n";
  } else {
    std::cout << "instance: " << path << " (" << inst.adapter << ")\n";
    std::cout << "cost:     " << approx(out.cost) << "\n";
    std::cout << "dual:     " << approx(out.dual) << "\n";
    std::cout << "x:        " << out.json["x"].dump() << "\n";
    if (!out.certificate.is_null() && certificate)
      std::cout << "cert:     " << out.certificate.dump() << "\n";
    if (ratio) std::cout << "ratio:    " << approx(*ratio) << "\n";
    if (oracle_skipped) std::cout << "oracle:   skipped (box exceeds --budget)\n";
    if (!out.feasible) std::cout << "INFEASIBLE at row " << out.violated << "\n";
  }
  return out.feasible ? kExitOk : kExitInfeasible;
}

int cmd_validate(const std::string& path, bool as_json, std::size_t budget) {
  Instance inst = pdcover::io::load_instance(path);
  pdcover::ValidationReport report;
  try {
    report = inst.is_product()
                 ? pdcover::apps::validate_product_properties(*inst.product, budget)
                 : pdcover::validate_greedy_properties(*inst.plain, budget);
  } catch (const pdcover::BudgetExceeded& ex) {
    // Too large to enumerate; adapters may certify the properties by
    // construction instead.
    if (inst.declared().properties_certified) {
      std::cout << path << ": certified by construction (" << inst.declared().note << ")\n";
      return kExitOk;
    }
    throw;
  }
  Json j = pdcover::io::validation_json(report, inst.element_names);
  if (as_json) {
    std::cout << j.dump(2) << "\n";
  } else if (report.ok()) {
    std::cout << path << ": ok (P1-P4 hold on the enumerated lattice)\n";
  } else {
    std::cout << path << ": " << report.violations.size() << " violation(s)\n";
    std::cout << j["violations"][0].dump(2) << "\n";
  }
  return report.ok() ? kExitOk : kExitInput;
}

int cmd_compare(const std::vector<std::string>& paths, bool as_json, std::size_t budget) {
  bool all_within = true;
  Json rows = Json::array();
  std::printf("%-28s %-12s %4s %14s %14s %14s %10s %s\n", "instance", "adapter", "|E|", "cost",
              "dual", "opt", "ratio", "certificate");
  for (const auto& path : paths) {
    auto started = std::chrono::steady_clock::now();
    Instance inst = pdcover::io::load_instance(path);
    SolveOutput out = inst.is_product() ? run_product(inst, false, true, true, budget)
                                        : run_plain(inst, false, true, budget);
    auto opt = oracle_for(inst, budget);
    std::optional<pdcover::Rational> ratio;
    if (opt && opt->feasible && opt->opt_value.sign() > 0) ratio = out.cost / opt->opt_value;
    else if (opt && opt->feasible && out.cost.is_zero()) ratio = pdcover::Rational(1);
    std::optional<pdcover::Rational> bound = inst.declared().ratio_bound;
    if (!bound && !out.certificate.is_null())
      bound = pdcover::Rational::parse(out.certificate["guarantee"].get<std::string>());
    bool within = !ratio || !bound || *ratio <= *bound;
    if (!within) all_within = false;
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                          started).count();
    Json row;
    row["instance"] = path;
    row["adapter"] = inst.adapter;
    row["elements"] = inst.element_names.size();
    row["cost"] = pdcover::io::rational_out(out.cost);
    row["dual"] = pdcover::io::rational_out(out.dual);
    row["opt"] =
        opt && opt->feasible ? pdcover::io::rational_out(opt->opt_value) : Json(nullptr);
    row["ratio"] = ratio ? pdcover::io::rational_out(*ratio) : Json(nullptr);
    row["bound"] = bound ? pdcover::io::rational_out(*bound) : Json(nullptr);
    row["within_bound"] = within;
    row["certificate"] = out.certificate;
    row["ms"] = ms;
    rows.push_back(row);
    std::printf("%-28s %-12s %4zu %14s %14s %14s %10s %s%s\n", path.c_str(),
                inst.adapter.c_str(), inst.element_names.size(), approx(out.cost).c_str(),
                approx(out.dual).c_str(),
                opt && opt->feasible ? approx(opt->opt_value).c_str() : "-",
                ratio ? approx(*ratio).c_str() : "-",
                out.certificate.is_null() ? "" : out.certificate.dump().c_str(),
                within ? "" : "  ** EXCEEDS BOUND **");
  }
  if (as_json) std::cout << rows.dump(2) << "\n";
  return all_within ? kExitOk : kExitInfeasible;
}

int cmd_gen(const std::string& family, int size, std::uint64_t seed, const std::string& out_path) {
  Json j = pdcover::gen::gen_json(family, size, seed);
  if (out_path.empty() || out_path == "-") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw pdcover::io::ParseError("cannot write " + out_path);
    out << j.dump(2) << "\n";
  }
  return kExitOk;
}

int cmd_oracle(const std::string& path, bool as_json, std::size_t budget) {
  Instance inst = pdcover::io::load_instance(path);
  // The explicit oracle command keeps the budget overrun as a hard error.
  pdcover::OracleResult opt = inst.is_product() ? pdcover::exact_opt(*inst.product, budget)
                                                : pdcover::exact_opt(*inst.plain, budget);
  Json j = pdcover::io::oracle_json(opt, inst.element_names);
  if (as_json)
    std::cout << j.dump(2) << "\n";
  else if (opt.feasible)
    std::cout << "opt " << approx(opt.opt_value) << " at " << j["argmin"].dump() << " ("
              << opt.nodes_enumerated << " nodes)\n";
  else
    std::cout << "infeasible (" << opt.nodes_enumerated << " nodes)\n";
  return opt.feasible ? kExitOk : kExitInfeasible;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"primal-dual greedy solver for weighted integer covering problems"};
  app.require_subcommand(1);
  app.fallthrough();

  bool as_json = false;
  std::size_t budget = 10'000'000;
  std::uint64_t seed = 1;
  app.add_flag("--json", as_json, "machine readable output");
  app.add_option("--budget", budget, "enumeration budget for oracles and validators");
  app.add_option("--seed", seed, "generator seed");

  std::string path, family, out_path;
  int size = 4;
  bool no_cleanup = false, raw = false, certificate = false, compare = false;

  CLI::App* solve = app.add_subcommand("solve", "run the primal-dual greedy on an instance");
  solve->add_option("file", path)->required();
  solve->add_flag("--no-cleanup", no_cleanup, "skip the product cleanup phase");
  solve->add_flag("--raw-matrix", raw, "debug: solve on A instead of the truncation");
  solve->add_flag("--certificate", certificate, "attach the approximation certificate");
  solve->add_flag("--compare", compare, "also run the exact oracle");

  CLI::App* validate = app.add_subcommand("validate", "check the greedy-system properties");
  validate->add_option("file", path)->required();

  std::vector<std::string> paths;
  CLI::App* comp = app.add_subcommand("compare", "solve, run the oracle and check bounds");
  comp->add_option("files", paths)->required();

  CLI::App* gen = app.add_subcommand("gen", "emit a deterministic instance file");
  gen->add_option("family", family)->required();
  gen->add_option("size", size)->required();
  gen->add_option("-o,--out", out_path, "output path (default stdout)");

  CLI::App* oracle = app.add_subcommand("oracle", "exhaustive exact optimum");
  oracle->add_option("file", path)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed())
      return cmd_solve(path, no_cleanup, raw, certificate, compare, as_json, budget);
    if (validate->parsed()) return cmd_validate(path, as_json, budget);
    if (comp->parsed()) return cmd_compare(paths, as_json, budget);
    if (gen->parsed()) return cmd_gen(family, size, seed, out_path);
    if (oracle->parsed()) return cmd_oracle(path, as_json, budget);
  } catch (const pdcover::io::ParseError& ex) {
    std::cerr << "input error: " << ex.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "input error: " << ex.what() << "\n";
    return kExitInput;
  } catch (const pdcover::BudgetExceeded& ex) {
    std::cerr << "input error: " << ex.what() << "\n";
    return kExitInput;
  } catch (const pdcover::apps::InfeasibleInstance& ex) {
    std::cerr << "infeasible: " << ex.what() << "\n";
    return kExitInfeasible;
  } catch (const pdcover::DualUnbounded& ex) {
    std::cerr << "infeasible: " << ex.what() << "\n";
    return kExitInfeasible;
  } catch (const std::exception& ex) {
    std::cerr << "input error: " << ex.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
