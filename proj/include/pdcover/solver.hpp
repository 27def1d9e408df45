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

#ifndef PDCOVER_SOLVER_HPP_
#define PDCOVER_SOLVER_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "pdcover/system.hpp"

namespace pdcover {

// Raised when the dual phase finds a row of positive rank whose support
// offers no raisable element; signals primal infeasibility of the truncation.
struct DualUnbounded : std::runtime_error {
  explicit DualUnbounded(LatticeElement row_in)
      : std::runtime_error("dual phase unbounded: positive rank with no raisable element"),
        row(std::move(row_in)) {}
  LatticeElement row;
};

// The rows raised by the dual phase, S_1 > S_2 > ... > S_{l+1} with
// S_{i+1} = phi_{e_i}(S_i), their bottleneck elements and raise amounts.
// rows.size() == bottlenecks.size() + 1 == raises.size() + 1.
struct DualChain {
  std::vector<LatticeElement> rows;
  std::vector<ElementId> bottlenecks;
  std::vector<Rational> raises;

  std::size_t length() const { return bottlenecks.size(); }
};

struct RunResult {
  DualChain chain;
  std::vector<long long> x;  // indexed by ElementId
  // Rows with a positive raise, in chain order; epsilon-zero raises do not
  // add support to y.
  std::vector<std::pair<LatticeElement, Rational>> y;
  Rational dual_value;
  Rational primal_cost;
};

struct Certificate {
  Rational rho;              // max over supp(y) of a'_S x / r(S)
  Rational delta_effective;  // chain-restricted delta under the exclusion rules
  int b = 2;
  int a = 1;
  Rational guarantee;  // b * delta_effective + a
  bool slackness_identity = false;  // primal_cost <= rho * dual_value, exact
};

struct FeasibilityReport {
  bool feasible = true;
  std::optional<LatticeElement> violated_row;
};

// Dual phase on the truncation: walk down from top via phi, raising each
// row until an element of its support becomes tight. Elements already tight
// are natural bottlenecks with a zero raise; ties break to the smallest id.
DualChain dual_phase(const TruncatedSystem& tr);

// Primal phase, x_{e_j} = ceil((r(S_j)^+ - r(S_{j+1})^+) / a'(S_j, e_j)).
std::vector<long long> primal_phase(const TruncatedSystem& tr, const DualChain& chain);

// truncate -> dual phase -> primal phase.
RunResult solve(const GreedySystem& sys);
RunResult solve_truncated(const TruncatedSystem& tr);

// First violated row of the original (or truncated) constraint family,
// scanning in enumeration order; falls back to the adapter separation
// routine when the lattice is too large to enumerate.
FeasibilityReport check_feasibility(const GreedySystem& sys, const std::vector<long long>& x,
                                    std::size_t budget = 1'000'000);
FeasibilityReport check_feasibility(const TruncatedSystem& tr, const std::vector<long long>& x,
                                    std::size_t budget = 1'000'000);
FeasibilityReport check_feasibility_fractional(const GreedySystem& sys,
                                               const std::vector<Rational>& x,
                                               std::size_t budget = 1'000'000);
FeasibilityReport check_feasibility_fractional(const TruncatedSystem& tr,
                                               const std::vector<Rational>& x,
                                               std::size_t budget = 1'000'000);

Certificate build_certificate(const RunResult& run, const TruncatedSystem& tr,
                              std::size_t budget = 1'000'000);

// Dual load per element implied by a chain; tests check it against costs.
std::vector<Rational> dual_loads(const TruncatedSystem& tr, const DualChain& chain);

}  // namespace pdcover

#endif  // PDCOVER_SOLVER_HPP_
