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

#ifndef PDCOVER_ORACLE_HPP_
#define PDCOVER_ORACLE_HPP_

#include <optional>
#include <vector>

#include "pdcover/solver.hpp"
#include "pdcover/system.hpp"

namespace pdcover {

// A fully materialized constraint row; coeffs runs parallel to support.
struct ExplicitRow {
  std::vector<ElementId> support;
  std::vector<Rational> coeffs;
  Rational rank;
};

// Componentwise search box. u_e is the largest ceil(r(S)^+ / a(S,e)) over
// rows supported on e, so clamping any feasible point into the box keeps it
// feasible: u_e copies of e alone satisfy every row containing it.
struct Box {
  std::vector<long long> upper;

  unsigned long long volume() const;
};

struct OracleResult {
  bool feasible = false;
  Rational opt_value;
  std::vector<long long> argmin;  // lexicographically least among optima
  unsigned long long nodes_enumerated = 0;
};

struct EquivalenceResult {
  bool equivalent = true;
  std::optional<std::vector<long long>> counterexample;
};

std::vector<ExplicitRow> explicit_rows(const GreedySystem& sys, std::size_t budget = 1'000'000);
std::vector<ExplicitRow> explicit_rows(const TruncatedSystem& tr, std::size_t budget = 1'000'000);

Box compute_box(const std::vector<ExplicitRow>& rows, int ground_size);

// Exhaustive integer minimization over the box: depth-first scan in fixed
// variable order with cost and row-slack pruning, deterministic
// lexicographically-least argmin among optima.
OracleResult exact_opt_rows(const std::vector<ExplicitRow>& rows, const std::vector<Rational>& costs,
                            std::size_t budget = 10'000'000);
OracleResult exact_opt(const GreedySystem& sys, std::size_t budget = 10'000'000);

// Enumerates every x in the original system's box and compares feasibility
// under (A, r) and (A', r).
EquivalenceResult truncation_equivalence(const GreedySystem& sys, const TruncatedSystem& tr,
                                         std::size_t budget = 1'000'000);

// primal_cost / opt_value, exact; checks weak duality dual <= opt and flags
// the opt = 0 with positive cost anomaly.
Rational approximation_ratio(const RunResult& run, const OracleResult& opt);

bool rows_feasible(const std::vector<ExplicitRow>& rows, const std::vector<long long>& x);

}  // namespace pdcover

#endif  // PDCOVER_ORACLE_HPP_
