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

#ifndef PDCOVER_SYSTEM_HPP_
#define PDCOVER_SYSTEM_HPP_

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pdcover/lattice.hpp"
#include "pdcover/rational.hpp"

namespace pdcover {

using CoeffFn = std::function<Rational(const LatticeElement&, ElementId)>;
using RankFn = std::function<Rational(const LatticeElement&)>;
// Violated-row oracle for implicit lattices: given an integer candidate x,
// return some violated row or nullopt when x is feasible.
using SeparationFn = std::function<std::optional<LatticeElement>(const std::vector<long long>&)>;

// Parameters an adapter certifies by construction, with a pointer to the
// argument that justifies them. compare checks solver ratios against
// ratio_bound and the tests check declared bounds against exact values
// computed on explicit fixtures.
struct Declarations {
  std::optional<Rational> delta_bound;
  std::optional<int> b_flag;
  bool rank_nonnegative = false;
  std::optional<Rational> ratio_bound;
  std::optional<Rational> witness_cover_bound;  // product systems only
  bool properties_certified = false;
  std::string note;
};

// The matrix-plus-rank pair (A, r) over a lattice. coeff must be positive
// exactly on the support of the row, costs are non-negative, and rank and
// coefficient evaluation must be pure and reentrant; systems are immutable
// and shareable once built.
struct GreedySystem {
  std::shared_ptr<const Lattice> lattice;
  CoeffFn coeff;
  RankFn rank;
  std::vector<Rational> costs;
  SeparationFn separation;  // optional
  Declarations declared;

  int ground_size() const { return lattice->ground_size(); }
};

inline Rational rank_plus(const GreedySystem& sys, const LatticeElement& s) {
  return sys.rank(s).positive_part();
}

// The truncation (A', r): a'(S,e) = min{a(S,e), r(S)^+ - r(phi_e(S))^+} on
// the support of the row and 0 elsewhere. Support always refers to the
// original A; rows whose coefficient truncates to zero keep their support.
// Evaluation is lazy, no enumeration of the lattice is required.
class TruncatedSystem {
 public:
  static TruncatedSystem truncate(GreedySystem sys) { return TruncatedSystem(std::move(sys), false); }
  // Debug path: keeps A as is, used to reproduce the untruncated behavior.
  static TruncatedSystem raw(GreedySystem sys) { return TruncatedSystem(std::move(sys), true); }

  const GreedySystem& base() const { return sys_; }
  bool is_raw() const { return raw_; }

  Rational rank(const LatticeElement& s) const { return sys_.rank(s); }
  Rational rank_plus(const LatticeElement& s) const { return sys_.rank(s).positive_part(); }
  Rational coeff(const LatticeElement& s, ElementId e) const;

 private:
  TruncatedSystem(GreedySystem sys, bool raw) : sys_(std::move(sys)), raw_(raw) {}
  GreedySystem sys_;
  bool raw_;
};

inline TruncatedSystem truncate(GreedySystem sys) { return TruncatedSystem::truncate(std::move(sys)); }

// Exhaustive P1-P4 check for systems whose lattice fits the enumeration
// budget. P4 costs O(|L|^2 |E|) comparisons; the budget guards against
// hanging on oversized lattices (throws BudgetExceeded).
ValidationReport validate_greedy_properties(const GreedySystem& sys,
                                            std::size_t budget = 10'000'000);

// delta = max ratio a'(top,e)/a'(S,e) over pairs where a'(S,e) > 0 and
// (r(phi_e(S)) >= 0 or a'(S,e) = a(S,e)); excluded pairs contribute 1.
Rational compute_delta(const TruncatedSystem& tr, std::size_t budget = 10'000'000);

// Diagnostic companion without the exclusion clause.
Rational compute_delta_naive(const TruncatedSystem& tr, std::size_t budget = 10'000'000);

// 1 when (r(S)^+ - r(phi_e(S))^+)/a'(S,e) is a non-negative integer for all
// rows and supported elements with a'(S,e) > 0, else 2.
int compute_b_flag(const TruncatedSystem& tr, std::size_t budget = 10'000'000);

// Sufficient condition for b = 1: a(S,e) >= r(S) - r(phi_e(S)) whenever
// r(phi_e(S)) >= 0. Cheap pre-test; true implies compute_b_flag returns 1.
bool b_flag_pretest(const GreedySystem& sys, std::size_t budget = 10'000'000);

// beta * gamma upper bound on delta. Scans the probe rows when supplied,
// otherwise the enumerated lattice. nullopt marks an unbounded gamma (a
// positive coefficient over a zero rank gap).
std::optional<Rational> beta_gamma_bound(const GreedySystem& sys,
                                         const std::vector<LatticeElement>& probe_rows = {},
                                         std::size_t budget = 10'000'000);

// Shared helper: enumerated rows or BudgetExceeded.
std::vector<LatticeElement> enumerate_rows(const Lattice& lat, std::size_t budget);

}  // namespace pdcover

#endif  // PDCOVER_SYSTEM_HPP_
