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

#ifndef PDCOVER_PRODUCT_HPP_
#define PDCOVER_PRODUCT_HPP_

#include <functional>
#include <optional>
#include <tuple>
#include <vector>

#include "pdcover/oracle.hpp"
#include "pdcover/solver.hpp"
#include "pdcover/system.hpp"

namespace pdcover {

// U_i <= U_j in the per-S partial order of the U family. Members are
// addressed by position so duplicate subsets stay distinct.
using ULeqFn = std::function<bool(int, int, const LatticeElement&)>;

// Row family B = U x L; the support of row (U, S) is U intersected with S.
// Every restriction to a fixed U must satisfy the greedy-system properties.
struct ProductSystem {
  std::shared_ptr<const Lattice> lattice;
  std::vector<std::vector<ElementId>> u_sets;
  std::function<Rational(int, const LatticeElement&)> rank;
  std::function<Rational(int, const LatticeElement&, ElementId)> coeff;
  ULeqFn u_leq;
  std::vector<Rational> costs;
  Declarations declared;

  int ground_size() const { return lattice->ground_size(); }
  int u_count() const { return static_cast<int>(u_sets.size()); }
};

struct TupleIndex {
  int u = -1;
  LatticeElement s;

  bool operator==(const TupleIndex& o) const { return u == o.u && s == o.s; }
};

// Per-subsystem truncation, applied to each (A, r)|U individually.
class ProductTruncation {
 public:
  static ProductTruncation truncate(ProductSystem ps) { return ProductTruncation(std::move(ps), false); }
  static ProductTruncation raw(ProductSystem ps) { return ProductTruncation(std::move(ps), true); }

  const ProductSystem& base() const { return ps_; }
  bool is_raw() const { return raw_; }
  Rational rank(int u, const LatticeElement& s) const { return ps_.rank(u, s); }
  Rational rank_plus(int u, const LatticeElement& s) const { return ps_.rank(u, s).positive_part(); }
  Rational coeff(int u, const LatticeElement& s, ElementId e) const;

 private:
  ProductTruncation(ProductSystem ps, bool raw) : ps_(std::move(ps)), raw_(raw) {}
  ProductSystem ps_;
  bool raw_;
};

struct ProductIteration {
  LatticeElement s;
  std::vector<int> raised;  // u indices of the maximal tuples
  Rational rank_value;      // shared rank r* of the raised tuples
  Rational epsilon;
  ElementId bottleneck = -1;
};

struct ProductRunResult {
  std::vector<ProductIteration> iterations;
  LatticeElement final_row;  // lattice component at the STOP test
  std::vector<long long> x;  // post-cleanup
  std::vector<long long> x_pre_cleanup;
  std::vector<std::tuple<int, LatticeElement, Rational>> y;  // positive raises only
  Rational dual_value;
  Rational primal_cost;
  Rational primal_cost_pre_cleanup;
};

struct IterationDiagnostics {
  std::size_t iteration = 0;  // index into ProductRunResult::iterations
  std::vector<TupleIndex> cover;
  bool cover_found = false;
  Rational lhs;  // sum over raised tuples of a' x
};

struct WitnessReport {
  // One entry per bottleneck element with x(e) > 0.
  std::vector<std::pair<ElementId, std::optional<TupleIndex>>> witnesses;
  std::vector<IterationDiagnostics> iterations;  // positive raises only
  Rational k_observed;                           // max |C_i| / |I_i|
  bool all_covers_found = true;
  bool truncation_binary = false;
  Rational delta_effective;
};

struct ProductCertificate {
  Rational rho;              // max over supp(y) of a'_(U,S) x / r(U,S)
  Rational delta_effective;  // run-restricted product delta
  int b = 2;
  int a = 1;
  Rational k_observed;
  Rational guarantee;  // k (delta + 1), tightened to k for binary truncations
  bool binary = false;
  bool slackness_identity = false;
};

ProductCertificate build_product_certificate(const ProductRunResult& run,
                                             const WitnessReport& report,
                                             const ProductTruncation& tr,
                                             std::size_t budget = 1'000'000);

// Maximal tuples of the current family under the lexicographic order: the
// max-rank tuples at the sublattice top, filtered to the maximal ones of
// the per-S order. They share the lattice component and the rank value.
std::vector<TupleIndex> lex_max_tuples(const ProductTruncation& tr, const LatticeElement& s);

// The revised algorithm: uniform raise of all maximal tuples, max-over-U
// primal rounding, then the reverse-order cleanup phase.
ProductRunResult revised_solve(const ProductSystem& ps, bool run_cleanup = true,
                               std::size_t budget = 1'000'000);
ProductRunResult revised_solve_truncated(const ProductTruncation& tr, bool run_cleanup = true,
                                         std::size_t budget = 1'000'000);

// Reverse-order decrement, computed in closed form per bottleneck: the
// smallest value keeping every row feasible.
void cleanup(const ProductTruncation& tr, std::vector<long long>& x,
             const std::vector<ElementId>& bottleneck_order, std::size_t budget = 1'000'000);

// First row witnessing that x(e) cannot be decremented, or nullopt.
std::optional<TupleIndex> find_witness(const ProductTruncation& tr, const std::vector<long long>& x,
                                       ElementId e, std::size_t budget = 1'000'000);

WitnessReport witness_cover_diagnostics(const ProductTruncation& tr, const ProductRunResult& run,
                                        std::size_t budget = 1'000'000);

FeasibilityReport check_feasibility(const ProductSystem& ps, const std::vector<long long>& x,
                                    std::size_t budget = 1'000'000);
FeasibilityReport check_feasibility(const ProductTruncation& tr, const std::vector<long long>& x,
                                    std::size_t budget = 1'000'000);

std::vector<ExplicitRow> explicit_rows(const ProductSystem& ps, std::size_t budget = 1'000'000);
std::vector<ExplicitRow> explicit_rows(const ProductTruncation& tr, std::size_t budget = 1'000'000);
OracleResult exact_opt(const ProductSystem& ps, std::size_t budget = 10'000'000);

// Exact product delta on enumerable systems: numerators at the lattice top,
// denominators under the exclusion clause.
Rational product_delta(const ProductTruncation& tr, std::size_t budget = 1'000'000);

// Plain systems are the U = {E} special case.
ProductSystem product_from_plain(const GreedySystem& sys);

}  // namespace pdcover

#endif  // PDCOVER_PRODUCT_HPP_
