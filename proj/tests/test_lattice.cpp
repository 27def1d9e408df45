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

#include <algorithm>

#include "doctest.h"
#include "pdcover/lattice.hpp"

using namespace pdcover;

namespace {

LatticeElement el(std::vector<ElementId> s) { return LatticeElement(std::move(s)); }

}  // namespace

TEST_CASE("boolean join meet phi") {
  BooleanLattice lat(3);
  CHECK(lat.join(el({0, 1}), el({1, 2})) == el({0, 1, 2}));
  CHECK(lat.join(el({0, 1}), el({0, 1})) == el({0, 1}));
  CHECK(lat.meet(el({0, 1}), el({1, 2})) == el({1}));
  CHECK(lat.meet(el({1}), el({1, 2})) == el({1}));  // absorption for comparable rows
  CHECK(lat.phi(el({0, 1, 2}), 1) == el({0, 2}));
  CHECK(lat.phi(el({0, 2}), 1) == el({0, 2}));  // phi fixed point off support
  CHECK(lat.top() == el({0, 1, 2}));
  CHECK(lat.bottom().support().empty());
  CHECK(lat.leq(el({0}), el({0, 1})));
  CHECK_FALSE(lat.leq(el({0, 1}), el({0})));
}

TEST_CASE("ideal lattice over a chain") {
  // e0 < e1 < e2: ideals are the prefixes.
  IdealLattice lat(3, {{0, 1}, {1, 2}});
  auto all = lat.enumerate(100);
  REQUIRE(all.has_value());
  CHECK(all->size() == 4);
  CHECK(lat.meet(el({0, 1}), el({0})) == el({0}));
  // phi removes the up-set: dropping e1 from the full chain drops e2 too.
  CHECK(lat.phi(el({0, 1, 2}), 1) == el({0}));
  // Independent oracle: the maximum ideal below {0,1,2} avoiding element 1,
  // found by scanning the enumeration.
  LatticeElement best = lat.bottom();
  for (const auto& s : *all)
    if (!s.contains(1) && lat.leq(s, el({0, 1, 2})) && lat.leq(best, s)) best = s;
  CHECK(best == el({0}));
  CHECK(lat.is_ideal({0, 1}));
  CHECK_FALSE(lat.is_ideal({1}));
  CHECK_THROWS_AS(IdealLattice(2, {{0, 1}, {1, 0}}), std::invalid_argument);
}

TEST_CASE("explicit lattice from covers and from inclusion") {
  // Diamond over two elements.
  ExplicitLattice lat({{}, {0}, {1}, {0, 1}}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  CHECK(lat.order_is_lattice());
  CHECK(lat.top() == el({0, 1}));
  CHECK(lat.join(el({0}), el({1})) == el({0, 1}));
  CHECK(lat.meet(el({0}), el({1})).support().empty());
  CHECK(lat.phi(el({0, 1}), 0) == el({1}));

  ExplicitLattice incl({{}, {0}, {1}, {0, 1}});
  CHECK(incl.order_is_lattice());
  CHECK(incl.join(el({0}), el({1})) == el({0, 1}));
}

TEST_CASE("verify_modular accepts boolean and forests, rejects the pentagon") {
  CHECK(verify_modular(materialize(BooleanLattice(3))).ok());
  {
    // Ideals of a forest of two chains; distributive, hence modular.
    IdealLattice lat(4, {{0, 1}, {2, 3}});
    CHECK(verify_modular(materialize(lat)).ok());
  }
  {
    // N5: 0 < a < b < 1 with c incomparable to both.
    ExplicitLattice n5({{}, {0}, {0, 1}, {2}, {0, 1, 2}},
                       {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}});
    CHECK(n5.order_is_lattice());
    ValidationReport report = verify_modular(n5);
    REQUIRE_FALSE(report.ok());
    CHECK(report.violations[0].property == "P3");
    CHECK(report.violations[0].rows.size() == 5);
  }
  CHECK_THROWS_AS(verify_modular(materialize(BooleanLattice(6), 1 << 16)), BudgetExceeded);
}

TEST_CASE("phi order preservation") {
  CHECK(verify_phi_order_preserving(materialize(BooleanLattice(3))).ok());
  {
    // Chain lattice {} < {0} < {0,1}: phi({0},0) = {} <= phi({0,1},0) = {}.
    ExplicitLattice chain({{}, {0}, {0, 1}});
    CHECK(verify_phi_order_preserving(chain).ok());
    CHECK(chain.phi(el({0}), 0).support().empty());
    CHECK(chain.phi(el({0, 1}), 0).support().empty());
  }
  {
    // Boolean 2^{0,1,2} with {0,2} removed: phi_1({0,1,2}) is ambiguous and
    // falls to the lowest-index maximal, breaking order preservation.
    ExplicitLattice broken({{}, {0}, {1}, {2}, {0, 1}, {1, 2}, {0, 1, 2}});
    ValidationReport report = verify_phi_order_preserving(broken);
    CHECK_FALSE(report.ok());
  }
}

TEST_CASE("lattice invariant properties on enumerable lattices") {
  std::vector<std::shared_ptr<Lattice>> lattices = {
      std::make_shared<BooleanLattice>(3),
      std::make_shared<IdealLattice>(4, std::vector<std::pair<ElementId, ElementId>>{{0, 1},
                                                                                     {1, 2},
                                                                                     {0, 3}}),
  };
  for (const auto& lat : lattices) {
    auto all = lat->enumerate(10000);
    REQUIRE(all.has_value());
    for (const auto& a : *all) {
      for (const auto& b : *all) {
        // Absorption.
        CHECK(lat->join(a, lat->meet(a, b)) == a);
        // Support monotonicity.
        if (lat->leq(a, b))
          CHECK(std::includes(b.support().begin(), b.support().end(), a.support().begin(),
                              a.support().end()));
        for (ElementId e = 0; e < lat->ground_size(); ++e) {
          // phi(S,e) = S meet phi(T,e) for S <= T, the identity behind
          // order preservation.
          if (lat->leq(a, b)) CHECK(lat->phi(a, e) == lat->meet(a, lat->phi(b, e)));
        }
      }
      for (ElementId e = 0; e < lat->ground_size(); ++e) {
        LatticeElement p = lat->phi(a, e);
        CHECK(lat->phi(p, e) == p);  // idempotence
        CHECK_FALSE(p.contains(e));
        CHECK(lat->leq(p, a));
      }
    }
  }
}
