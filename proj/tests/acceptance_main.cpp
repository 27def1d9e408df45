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

// Acceptance suite: one self-contained check per criterion, each printing a
// single pass/fail line. Everything is exact rational arithmetic; there are
// no tolerances anywhere.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "pdcover/apps.hpp"
#include "pdcover/gen.hpp"
#include "pdcover/oracle.hpp"
#include "pdcover/product.hpp"
#include "pdcover/solver.hpp"

using namespace pdcover;

namespace {

int g_failures = 0;

void run(int number, const std::string& name,
         const std::function<std::pair<bool, std::string>()>& body) {
  auto start = std::chrono::steady_clock::now();
  bool pass = false;
  std::string detail;
  try {
    auto [p, d] = body();
    pass = p;
    detail = d;
  } catch (const std::exception& ex) {
    detail = std::string("exception: ") + ex.what();
  }
  double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("[%s] criterion %d: %-30s %s (%.2fs)\n", pass ? "PASS" : "FAIL", number,
              name.c_str(), detail.c_str(), seconds);
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

// Shared instance pools so the feasibility, equivalence and certificate
// criteria exercise the same suite.
struct PlainCase {
  std::string family;
  GreedySystem sys;
};
struct ProductCase {
  std::string family;
  ProductSystem sys;
};

std::vector<PlainCase> plain_suite() {
  std::vector<PlainCase> out;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    int n = 3 + static_cast<int>(seed % 4);  // up to 6
    out.push_back({"polymatroid-cardinality",
                   gen::build_cardinality_system(gen::make_cardinality(n, seed))});
  }
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    int n = 2 + static_cast<int>(seed % 5);  // up to 6
    out.push_back({"knapsack", apps::build_knapsack_cover(gen::make_knapsack(n, seed)).system});
  }
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    int g = 3 + static_cast<int>(seed % 4);  // ground up to 6
    out.push_back({"subsetcover", apps::build_subset_cover(gen::make_subsetcover(g, seed))});
  }
  return out;
}

std::vector<ProductCase> product_suite() {
  std::vector<ProductCase> out;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    int edges = 3 + static_cast<int>(seed % 3);  // up to 5
    out.push_back(
        {"flowcover", apps::build_flow_cover_lines(gen::make_flowcover(edges, seed)).system});
  }
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    int edges = 3 + static_cast<int>(seed % 4);  // up to 6
    out.push_back({"multicut", apps::build_multicut_tree(gen::make_multicut(edges, seed)).system});
  }
  return out;
}

// Criterion 1: the forced necessity runs, exact.
std::pair<bool, std::string> criterion1() {
  RunResult p2 = solve(gen::p2cex_system());
  auto p2f = check_feasibility(gen::p2cex_system(), p2.x);
  bool ok = p2.x == std::vector<long long>{5, 1} && !p2f.feasible &&
            p2f.violated_row->support() == std::vector<ElementId>{0, 1};
  RunResult p4 = solve(gen::p4cex_system());
  auto p4f = check_feasibility(gen::p4cex_system(), p4.x);
  ok = ok && p4.x == std::vector<long long>{1, 2} && !p4f.feasible &&
       p4f.violated_row->support() == std::vector<ElementId>{0};
  return {ok, "P2 run x=(5,1) infeasible at E; P4 run x=(1,2) infeasible at {1}"};
}

// Criterion 2: 1000 seeded instances, solver output feasible for (P) and (T).
std::pair<bool, std::string> criterion2() {
  int checked = 0, failures = 0;
  for (const auto& c : plain_suite()) {
    TruncatedSystem tr = truncate(c.sys);
    RunResult run = solve_truncated(tr);
    if (!check_feasibility(c.sys, run.x).feasible) ++failures;
    if (!check_feasibility(tr, run.x).feasible) ++failures;
    ++checked;
  }
  for (const auto& c : product_suite()) {
    ProductTruncation tr = ProductTruncation::truncate(c.sys);
    ProductRunResult run = revised_solve_truncated(tr);
    if (!check_feasibility(c.sys, run.x).feasible) ++failures;
    if (!check_feasibility(tr, run.x).feasible) ++failures;
    ++checked;
  }
  std::ostringstream detail;
  detail << checked << " instances, " << failures << " infeasible outputs";
  return {checked == 1000 && failures == 0, detail.str()};
}

// Criterion 3: integer-point equivalence of (A,r) and (A',r).
std::pair<bool, std::string> criterion3() {
  int checked = 0, skipped = 0, failures = 0;
  for (const auto& c : plain_suite()) {
    try {
      auto eq = truncation_equivalence(c.sys, truncate(c.sys), 1'000'000);
      if (!eq.equivalent) ++failures;
      ++checked;
    } catch (const BudgetExceeded&) {
      ++skipped;  // box larger than 10^6 points
    }
  }
  std::ostringstream detail;
  detail << checked << " systems equivalent, " << skipped << " beyond the 10^6 box, " << failures
         << " mismatches";
  return {failures == 0 && checked > 400, detail.str()};
}

// Criterion 4: Theorem 1 certificates, exact.
std::pair<bool, std::string> criterion4() {
  int checked = 0, skipped = 0, failures = 0;
  for (const auto& c : plain_suite()) {
    TruncatedSystem tr = truncate(c.sys);
    RunResult run = solve_truncated(tr);
    Certificate cert = build_certificate(run, tr);
    Rational delta = compute_delta(tr);
    int b = compute_b_flag(tr);
    int a = 0;
    for (const auto& row : enumerate_rows(*c.sys.lattice, 100000))
      if (c.sys.rank(row).sign() < 0) {
        a = 1;
        break;
      }
    Rational bound = Rational(b) * delta + Rational(a);
    if (!(run.primal_cost <= cert.rho * run.dual_value)) ++failures;
    if (!(cert.rho <= bound)) ++failures;
    try {
      OracleResult opt = exact_opt(c.sys, 10'000'000);
      if (run.dual_value > opt.opt_value) ++failures;
      if (opt.opt_value.sign() > 0 && !(run.primal_cost <= bound * opt.opt_value)) ++failures;
      if (opt.opt_value.is_zero() && run.primal_cost.sign() > 0) ++failures;
      ++checked;
    } catch (const BudgetExceeded&) {
      ++skipped;  // identity and rho bound still verified above
    }
  }
  std::ostringstream detail;
  detail << checked << " instances against the oracle, " << skipped
         << " identity-only (box beyond budget), " << failures << " violations";
  return {failures == 0 && checked > 400, detail.str()};
}

// Criterion 5: desk-scale ratio table.
std::pair<bool, std::string> criterion5() {
  int failures = 0;
  std::ostringstream detail;
  auto ratio_plain = [&](const GreedySystem& sys) {
    RunResult run = solve(sys);
    OracleResult opt = exact_opt(sys, 50'000'000);
    if (opt.opt_value.is_zero()) {
      if (run.primal_cost.sign() > 0) ++failures;
      return Rational(1);
    }
    return approximation_ratio(run, opt);
  };
  auto ratio_product = [&](const ProductSystem& ps) {
    ProductRunResult run = revised_solve(ps);
    OracleResult opt = exact_opt(ps, 50'000'000);
    if (run.dual_value > opt.opt_value) ++failures;
    if (opt.opt_value.is_zero()) {
      if (run.primal_cost.sign() > 0) ++failures;
      return Rational(1);
    }
    return run.primal_cost / opt.opt_value;
  };

  // Contra-polymatroids: exactly optimal.
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    int n = 3 + static_cast<int>(seed % 3);
    GreedySystem sys =
        gen::build_cardinality_system(gen::make_cardinality(n, seed, /*allow_shift=*/false));
    if (ratio_plain(sys) != Rational(1)) ++failures;
  }
  detail << "polymatroid=1";

  // Knapsack cover, multiplicities and marginal variants included; the
  // boxed generator keeps the oracle's enumeration small.
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    int n = 2 + static_cast<int>(seed % 5);
    apps::KnapsackInstance inst = gen::make_knapsack_boxed(n, seed, /*allow_variants=*/true);
    if (ratio_plain(apps::build_knapsack_cover(inst).system) > Rational(2)) ++failures;
  }
  detail << " knapsack<=2";

  // Subset cover within max |T_i|.
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    apps::SubsetCoverInstance inst = gen::make_subsetcover(3 + static_cast<int>(seed % 4), seed);
    std::size_t largest = 0;
    for (const auto& s : inst.sets) largest = std::max(largest, s.size());
    if (ratio_plain(apps::build_subset_cover(inst)) > Rational(static_cast<long>(largest)))
      ++failures;
  }
  detail << " subsetcover<=max|T|";

  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    ProductSystem ps = apps::build_intersection(gen::make_intersection(3, 2, seed));
    if (ratio_product(ps) > Rational(2)) ++failures;
  }
  detail << " intersection<=2";

  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    apps::FlowCoverBuild build =
        apps::build_flow_cover_lines(gen::make_flowcover(3 + static_cast<int>(seed % 2), seed));
    if (ratio_product(build.system) > Rational(4L * build.k)) ++failures;
  }
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    apps::FlowCoverBuild build =
        apps::build_flow_cover_lines(gen::make_flowcover(4 + static_cast<int>(seed % 2), seed, 2));
    if (build.k > 2) ++failures;
    if (ratio_product(build.system) > Rational(4L * build.k)) ++failures;
  }
  detail << " flowcover<=4k";

  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    apps::PrecedenceKnapsackBuild build =
        apps::build_precedence_knapsack(gen::make_precknap(3 + static_cast<int>(seed % 3), seed));
    if (ratio_product(build.system) > Rational(build.width)) ++failures;
  }
  detail << " precknap<=w";

  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    ProductSystem ps =
        apps::build_multicut_tree(gen::make_multicut(3 + static_cast<int>(seed % 4), seed)).system;
    if (ratio_product(ps) > Rational(2)) ++failures;
  }
  detail << " multicut<=2; " << failures << " violations";
  return {failures == 0, detail.str()};
}

// Criterion 6: tightness reproductions.
std::pair<bool, std::string> criterion6() {
  int failures = 0;
  // (a) bad dual subset cover, exact primal/dual gap.
  for (int n = 3; n <= 5; ++n) {
    int M = n - 1;
    RunResult run = solve(apps::build_subset_cover(gen::baddual_instance(n, M)));
    if (run.primal_cost / run.dual_value !=
        Rational(static_cast<long>(n) * (M + 1), static_cast<long>(M + n)))
      ++failures;
  }
  // (b) k-gap: dual 1, primal k.
  for (int k = 2; k <= 6; ++k) {
    ProductRunResult run = revised_solve(gen::kgap_system(k));
    if (run.dual_value != Rational(1) || run.primal_cost != Rational(k)) ++failures;
  }
  // (c) linear gap: the fractional point is feasible in (T); integer
  // optimum at least n/2.
  for (int n : {4, 6, 8}) {
    GreedySystem sys = gen::lineargap_system(n);
    std::vector<Rational> frac(n, Rational(4, n - 1));
    if (!check_feasibility_fractional(truncate(sys), frac).feasible) ++failures;
    OracleResult opt = exact_opt(sys);
    if (!(opt.opt_value >= Rational(n / 2))) ++failures;
  }
  // (d) the knapsack gap instance: fractional (1/D, 1) of cost 2 in (P),
  // integer optimum D.
  for (long D : {3L, 10L}) {
    GreedySystem sys = apps::build_knapsack_cover(gen::knapgap_instance(D)).system;
    std::vector<Rational> frac = {Rational(1, D), Rational(1)};
    if (!check_feasibility_fractional(sys, frac).feasible) ++failures;
    if (Rational(1, D) * sys.costs[0] + sys.costs[1] != Rational(2)) ++failures;
    if (exact_opt(sys).opt_value != Rational(D)) ++failures;
  }
  return {failures == 0,
          "baddual n(M+1)/(M+n); kgap dual 1 primal k; lineargap fractional + OPT >= n/2; "
          "knapgap (1/D,1) cost 2, OPT = D"};
}

// Criterion 7: cleanup necessity on the star instance.
std::pair<bool, std::string> criterion7() {
  ProductSystem ps = gen::starcleanup_system(4);
  ProductTruncation tr = ProductTruncation::truncate(ps);
  ProductRunResult without = revised_solve_truncated(tr, /*run_cleanup=*/false);
  ProductRunResult with_cleanup = revised_solve_truncated(tr, /*run_cleanup=*/true);
  OracleResult opt = exact_opt(ps);
  bool ok = without.primal_cost == Rational(10) && with_cleanup.primal_cost == Rational(4) &&
            opt.opt_value == Rational(4);
  return {ok, "no-cleanup cost 10, cleanup cost 4 = oracle OPT"};
}

// Criterion 8: reduction identity on 100 random plain systems.
std::pair<bool, std::string> criterion8() {
  int failures = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    int n = 3 + static_cast<int>(seed % 3);
    GreedySystem plain = gen::build_cardinality_system(gen::make_cardinality(n, seed));
    RunResult direct = solve(plain);
    ProductRunResult wrapped = revised_solve(product_from_plain(plain));
    bool same = direct.x == wrapped.x && direct.dual_value == wrapped.dual_value &&
                direct.primal_cost == wrapped.primal_cost &&
                direct.y.size() == wrapped.y.size();
    for (std::size_t i = 0; same && i < direct.y.size(); ++i)
      same = direct.y[i].first == std::get<1>(wrapped.y[i]) &&
             direct.y[i].second == std::get<2>(wrapped.y[i]);
    if (!same) ++failures;
  }
  return {failures == 0, "100 runs bit-identical (x and y)"};
}

// Criterion 9: witness diagnostics and the Theorem 2 certificate.
std::pair<bool, std::string> criterion9() {
  int failures = 0, runs = 0;
  auto check_product = [&](const ProductSystem& ps, std::optional<Rational> per_iter_bound) {
    ProductTruncation tr = ProductTruncation::truncate(ps);
    ProductRunResult run = revised_solve_truncated(tr);
    WitnessReport report = witness_cover_diagnostics(tr, run);
    if (!report.all_covers_found) ++failures;
    for (const auto& diag : report.iterations) {
      const auto& iter = run.iterations[diag.iteration];
      if (per_iter_bound) {
        Rational per_iter = Rational(static_cast<long>(diag.cover.size())) /
                            Rational(static_cast<long>(iter.raised.size()));
        if (per_iter > *per_iter_bound) ++failures;
      }
      // Per-iteration Theorem 2 inequality, exact.
      Rational bound = (report.delta_effective + Rational(1)) *
                       Rational(static_cast<long>(diag.cover.size())) * iter.rank_value;
      if (diag.lhs > bound) ++failures;
      if (report.truncation_binary &&
          diag.lhs > Rational(static_cast<long>(diag.cover.size())) * iter.rank_value)
        ++failures;
    }
    if (run.primal_cost >
        report.k_observed * (report.delta_effective + Rational(1)) * run.dual_value)
      ++failures;
    if (report.truncation_binary && run.primal_cost > report.k_observed * run.dual_value)
      ++failures;
    ++runs;
  };
  for (std::uint64_t seed = 1; seed <= 40; ++seed)
    check_product(apps::build_flow_cover_lines(gen::make_flowcover(3 + static_cast<int>(seed % 3),
                                                                   seed)).system,
                  Rational(2));
  for (std::uint64_t seed = 1; seed <= 40; ++seed)
    check_product(apps::build_multicut_tree(gen::make_multicut(3 + static_cast<int>(seed % 4),
                                                               seed)).system,
                  Rational(2));
  for (int k = 2; k <= 5; ++k) check_product(gen::kgap_system(k), std::nullopt);
  check_product(gen::starcleanup_system(4), std::nullopt);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    check_product(apps::build_intersection(gen::make_intersection(3, 2, seed)), std::nullopt);
    check_product(apps::build_precedence_knapsack(gen::make_precknap(4, seed)).system,
                  std::nullopt);
  }
  std::ostringstream detail;
  detail << runs << " product runs; flow cover and multicut covers within 2 per raised tuple; "
         << failures << " violations";
  return {failures == 0, detail.str()};
}

}  // namespace

int main() {
  run(1, "counterexample regression", criterion1);
  run(2, "feasibility property suite", criterion2);
  run(3, "truncation equivalence", criterion3);
  run(4, "theorem 1 bounds", criterion4);
  run(5, "ratio table at desk scale", criterion5);
  run(6, "tightness reproductions", criterion6);
  run(7, "cleanup necessity", criterion7);
  run(8, "reduction identity", criterion8);
  run(9, "witness diagnostics", criterion9);
  if (g_failures == 0) {
    std::printf("all acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d criterion(s) failed\n", g_failures);
  return 1;
}
