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

#include "doctest.h"
#include "pdcover/apps.hpp"
#include "pdcover/gen.hpp"
#include "pdcover/system.hpp"

using namespace pdcover;

namespace {

LatticeElement el(std::vector<ElementId> s) { return LatticeElement(std::move(s)); }

GreedySystem tiny_explicit(std::vector<std::vector<ElementId>> supports,
                           std::vector<std::vector<Rational>> coeffs,
                           std::vector<Rational> ranks, std::vector<Rational> costs) {
  auto lat = std::make_shared<ExplicitLattice>(supports);
  auto ctab = std::make_shared<std::vector<std::map<ElementId, Rational>>>();
  for (std::size_t i = 0; i < supports.size(); ++i) {
    std::map<ElementId, Rational> row;
    for (std::size_t k = 0; k < supports[i].size(); ++k) row[supports[i][k]] = coeffs[i][k];
    ctab->push_back(std::move(row));
  }
  auto rtab = std::make_shared<std::vector<Rational>>(std::move(ranks));
  GreedySystem sys;
  sys.lattice = lat;
  sys.coeff = [lat, ctab](const LatticeElement& s, ElementId e) {
    const auto& row = (*ctab)[lat->index_of(s)];
    auto it = row.find(e);
    return it == row.end() ? Rational(0) : it->second;
  };
  sys.rank = [lat, rtab](const LatticeElement& s) { return (*rtab)[lat->index_of(s)]; };
  sys.costs = std::move(costs);
  return sys;
}

}  // namespace

TEST_CASE("rank_plus clamps at zero") {
  GreedySystem sys = gen::p1cex_system();
  CHECK(rank_plus(sys, el({0})) == Rational(0));   // rank -2
  CHECK(rank_plus(sys, el({0, 1})) == Rational(2));
  GreedySystem zero = tiny_explicit({{}, {0}}, {{}, {Rational(1)}}, {Rational(0), Rational(0)},
                                    {Rational(1)});
  CHECK(rank_plus(zero, el({0})) == Rational(0));  // boundary
}

TEST_CASE("validate accepts the subset cover formulation") {
  apps::SubsetCoverInstance inst;
  inst.ground_size = 3;
  inst.sets = {{0, 1}, {2}};
  inst.costs = {Rational(1), Rational(1)};
  GreedySystem sys = apps::build_subset_cover(inst);
  CHECK(validate_greedy_properties(sys).ok());
}

TEST_CASE("validate flags the necessity systems") {
  {
    ValidationReport report = validate_greedy_properties(gen::p2cex_system());
    REQUIRE_FALSE(report.ok());
    const Violation& v = report.violations.front();
    CHECK(v.property == "P2");
    CHECK(v.element == 0);
    CHECK(v.rows[0] == std::vector<ElementId>{0});
    CHECK(v.rows[1] == std::vector<ElementId>{0, 1});
    CHECK(v.values[0] == Rational(5));
    CHECK(v.values[1] == Rational(1));
    for (const auto& violation : report.violations) CHECK(violation.property == "P2");
  }
  {
    ValidationReport report = validate_greedy_properties(gen::p4cex_system());
    REQUIRE_FALSE(report.ok());
    for (const auto& violation : report.violations) CHECK(violation.property == "P4");
  }
  // The rank-monotonicity counterexample only breaks P1.
  {
    ValidationReport report = validate_greedy_properties(gen::p1cex_system());
    REQUIRE_FALSE(report.ok());
    for (const auto& violation : report.violations) CHECK(violation.property == "P1");
  }
}

TEST_CASE("truncation of the knapsack gap instance") {
  apps::KnapsackBuild build = apps::build_knapsack_cover(gen::knapgap_instance(3));
  TruncatedSystem tr = truncate(build.system);
  // Core rows are the not-yet-counted suffix sets; element 0 is the big item.
  CHECK(tr.coeff(el({0, 1}), 1) == Rational(2));
  CHECK(tr.coeff(el({0, 1}), 0) == Rational(3));
  CHECK(build.system.rank(el({1})) == Rational(0));  // big item counted
  CHECK(tr.coeff(el({1}), 1) == Rational(0));
  CHECK(tr.coeff(el({0}), 0) == Rational(1));
}

TEST_CASE("truncation of the linear gap instance at n = 4") {
  GreedySystem sys = gen::lineargap_system(4);
  TruncatedSystem tr = truncate(sys);
  CHECK(sys.rank(el({0, 1, 2, 3})) == Rational(12));
  CHECK(sys.rank(el({0, 1, 2})) == Rational(4));
  CHECK(sys.rank(el({0, 1})) == Rational(0));
  CHECK(tr.coeff(el({0, 1, 2, 3}), 0) == Rational(8));
  CHECK(tr.coeff(el({0, 1, 2}), 0) == Rational(4));
  CHECK(tr.coeff(el({0, 1}), 0) == Rational(0));
  // Rows of non-positive rank truncate to zero everywhere.
  CHECK(tr.coeff(el({0}), 0) == Rational(0));
}

TEST_CASE("delta of the bad dual subset cover family") {
  GreedySystem sys = apps::build_subset_cover(gen::baddual_instance(3, 2));
  TruncatedSystem tr = truncate(sys);
  CHECK(compute_delta(tr) == Rational(3));  // M + 1
  CHECK(*sys.declared.delta_bound >= Rational(3));
}

TEST_CASE("delta is 1 for binary systems") {
  apps::ContraPolymatroidInstance inst;
  inst.n = 2;
  inst.rank = [](const std::vector<ElementId>& s) {
    return Rational(static_cast<long>(s.size() * s.size()));
  };
  inst.costs = {Rational(1), Rational(2)};
  GreedySystem sys = apps::build_contra_polymatroid(inst);
  CHECK(compute_delta(truncate(sys)) == Rational(1));
}

TEST_CASE("delta exclusion versus the naive ratio") {
  // Knapsack-style: the excluded final coefficient would inflate the naive
  // ratio but not delta.
  apps::KnapsackInstance inst;
  inst.items = {{Rational(3), Rational(3)}, {Rational(2), Rational(1)}};
  inst.demand = Rational(3);
  TruncatedSystem tr = truncate(apps::build_knapsack_cover(inst).system);
  CHECK(compute_delta(tr) == Rational(1));
  CHECK(compute_delta_naive(tr) == Rational(3));  // a'(E,0)/a'({0},0) = 3/1
}

TEST_CASE("b flag") {
  // Divisible gaps throughout the knapsack and subset cover formulations.
  CHECK(compute_b_flag(truncate(apps::build_knapsack_cover(gen::knapgap_instance(3)).system)) == 1);
  CHECK(compute_b_flag(truncate(apps::build_subset_cover(gen::baddual_instance(3, 2)))) == 1);
  // Rank gap 10 over coefficient 4 is not integral.
  GreedySystem bad = tiny_explicit({{}, {0}}, {{}, {Rational(4)}}, {Rational(0), Rational(10)},
                                   {Rational(1)});
  CHECK(compute_b_flag(truncate(bad)) == 2);
  CHECK_FALSE(b_flag_pretest(bad));
  CHECK(b_flag_pretest(apps::build_subset_cover(gen::baddual_instance(3, 2))));
}

TEST_CASE("beta gamma bound") {
  {
    // Disjoint sets: every gap equals |T_i|, so the instance-exact bound
    // collapses to 1 while the declared worst case is max |T_i|.
    apps::SubsetCoverInstance inst;
    inst.ground_size = 3;
    inst.sets = {{0, 1}, {2}};
    inst.costs = {Rational(1), Rational(1)};
    GreedySystem sys = apps::build_subset_cover(inst);
    auto bound = beta_gamma_bound(sys);
    REQUIRE(bound.has_value());
    CHECK(*bound == Rational(1));
    CHECK(*bound <= *sys.declared.delta_bound);
    CHECK(compute_delta(truncate(sys)) <= *bound);
  }
  {
    // Overlapping family with unit gaps: gamma reaches max |T_i|.
    GreedySystem sys = apps::build_subset_cover(gen::baddual_instance(3, 2));
    auto bound = beta_gamma_bound(sys);
    REQUIRE(bound.has_value());
    CHECK(*bound == Rational(3));  // beta = 1, gamma = max |T_i| = M + 1
    CHECK(compute_delta(truncate(sys)) <= *bound);
  }
  {
    // Binary with unit gaps.
    GreedySystem sys = apps::build_cardinality_system(
        3, {Rational(0), Rational(1), Rational(2), Rational(3)}, Rational(0),
        {Rational(1), Rational(1), Rational(1)});
    auto bound = beta_gamma_bound(sys);
    REQUIRE(bound.has_value());
    CHECK(*bound == Rational(1));
  }
  {
    // Knapsack: gaps equal the weights, so gamma = 1.
    apps::KnapsackInstance inst;
    inst.items = {{Rational(2), Rational(1)}, {Rational(4), Rational(1)}, {Rational(3), Rational(2)}};
    inst.demand = Rational(6);
    auto bound = beta_gamma_bound(apps::build_knapsack_cover(inst).system);
    REQUIRE(bound.has_value());
    CHECK(*bound == Rational(1));
  }
  {
    // Zero rank gap under a positive coefficient: unbounded marker.
    GreedySystem flat = tiny_explicit({{}, {0}}, {{}, {Rational(2)}},
                                      {Rational(0), Rational(0)}, {Rational(1)});
    CHECK_FALSE(beta_gamma_bound(flat).has_value());
  }
}

TEST_CASE("truncated coefficients are monotone on chains") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    GreedySystem sys = gen::build_cardinality_system(gen::make_cardinality(4, seed));
    TruncatedSystem tr = truncate(sys);
    auto rows = sys.lattice->enumerate(100);
    for (const auto& s : *rows)
      for (const auto& t : *rows) {
        if (!sys.lattice->leq(s, t)) continue;
        for (ElementId e : s.support()) {
          CHECK(tr.coeff(s, e) <= tr.coeff(t, e));
          CHECK(tr.coeff(s, e) >= Rational(0));
          CHECK(tr.coeff(s, e) <= sys.coeff(s, e));
        }
      }
  }
}

TEST_CASE("marginal increase supermodularity and monotone around zero") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    GreedySystem sys = gen::build_cardinality_system(gen::make_cardinality(4, seed));
    REQUIRE(validate_greedy_properties(sys).ok());
    auto rows = sys.lattice->enumerate(100);
    for (const auto& s : *rows)
      for (const auto& t : *rows) {
        if (!sys.lattice->leq(s, t)) continue;
        for (ElementId e : s.support()) {
          LatticeElement ps = sys.lattice->phi(s, e);
          LatticeElement pt = sys.lattice->phi(t, e);
          Rational as = sys.coeff(s, e), at = sys.coeff(t, e);
          CHECK((sys.rank(s) - sys.rank(ps)) * at <= (sys.rank(t) - sys.rank(pt)) * as);
          if (sys.rank(s).sign() >= 0 && sys.rank(t).sign() >= 0 && sys.rank(ps).sign() <= 0 &&
              sys.rank(pt).sign() <= 0)
            CHECK(sys.rank(s) * at <= sys.rank(t) * as);
        }
      }
  }
}
