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

#include "pdcover/system.hpp"

#include <algorithm>

namespace pdcover {

namespace {

bool subset_of(const std::vector<ElementId>& a, const std::vector<ElementId>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

Rational TruncatedSystem::coeff(const LatticeElement& s, ElementId e) const {
  if (!s.contains(e)) return Rational(0);
  Rational a = sys_.coeff(s, e);
  if (raw_) return a;
  Rational gap = rank_plus(s) - rank_plus(sys_.lattice->phi(s, e));
  // The gap is non-negative for greedy systems; clamping keeps the
  // 0 <= a' <= a invariant on forced runs over invalid inputs.
  if (gap.sign() < 0) gap = Rational(0);
  return rational_min(a, gap);
}

std::vector<LatticeElement> enumerate_rows(const Lattice& lat, std::size_t budget) {
  auto rows = lat.enumerate(budget);
  if (!rows) throw BudgetExceeded("lattice exceeds the enumeration budget");
  return std::move(*rows);
}

ValidationReport validate_greedy_properties(const GreedySystem& sys, std::size_t budget) {
  const Lattice& lat = *sys.lattice;
  ValidationReport report;
  std::vector<LatticeElement> rows = enumerate_rows(lat, budget);
  const std::size_t n = rows.size();
  const std::size_t m = static_cast<std::size_t>(sys.ground_size());
  if (n * n * m > budget)
    throw BudgetExceeded("validate_greedy_properties: P4 scan exceeds the budget");

  // Support consistency: coeff positive exactly on the support.
  for (const auto& s : rows) {
    for (ElementId e = 0; e < sys.ground_size(); ++e) {
      Rational a = sys.coeff(s, e);
      if ((a.sign() > 0) != s.contains(e)) {
        Violation v;
        v.property = "P3";
        v.message = "coefficient support does not match the row support";
        v.rows = {s.support()};
        v.element = e;
        v.values = {a};
        report.violations.push_back(std::move(v));
      }
    }
  }

  // P1 and P2 on comparable pairs.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !lat.leq(rows[i], rows[j])) continue;
      Rational ri = sys.rank(rows[i]), rj = sys.rank(rows[j]);
      if (ri > rj) {
        Violation v;
        v.property = "P1";
        v.message = "rank is not monotone";
        v.rows = {rows[i].support(), rows[j].support()};
        v.values = {ri, rj};
        report.violations.push_back(std::move(v));
      }
      for (ElementId e : rows[i].support()) {
        Rational ai = sys.coeff(rows[i], e), aj = sys.coeff(rows[j], e);
        if (ai > aj) {
          Violation v;
          v.property = "P2";
          v.message = "column is not monotone";
          v.rows = {rows[i].support(), rows[j].support()};
          v.element = e;
          v.values = {ai, aj};
          report.violations.push_back(std::move(v));
        }
      }
    }
  }

  // P3: modular lattice, distinct supports, join support containment.
  {
    std::vector<std::vector<ElementId>> seen;
    for (const auto& r : rows) seen.push_back(r.support());
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
      Violation v;
      v.property = "P3";
      v.message = "two rows share a support";
      v.rows = {*std::adjacent_find(seen.begin(), seen.end())};
      report.violations.push_back(std::move(v));
    }
    if (n * n * n > budget)
      throw BudgetExceeded("validate_greedy_properties: modularity scan exceeds the budget");
    ExplicitLattice mat = materialize(lat, n);
    ValidationReport modular = verify_modular(mat, budget);
    for (auto& v : modular.violations) report.violations.push_back(std::move(v));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        LatticeElement jn = lat.join(rows[i], rows[j]);
        auto un = rows[i].support();
        un.insert(un.end(), rows[j].support().begin(), rows[j].support().end());
        std::sort(un.begin(), un.end());
        un.erase(std::unique(un.begin(), un.end()), un.end());
        if (!subset_of(jn.support(), un)) {
          Violation v;
          v.property = "P3";
          v.message = "join support leaves the union of supports";
          v.rows = {rows[i].support(), rows[j].support(), jn.support()};
          report.violations.push_back(std::move(v));
        }
      }
  }

  // P4: weighted supermodularity, compared cross-multiplied so zero
  // coefficients on broken inputs cannot divide.
  for (std::size_t i = 0; i < n; ++i) {
    const LatticeElement& s = rows[i];
    for (std::size_t j = 0; j < n; ++j) {
      const LatticeElement& t = rows[j];
      LatticeElement mt = lat.meet(s, t);
      LatticeElement jn = lat.join(s, t);
      for (ElementId e : t.support()) {
        if (mt.contains(e)) continue;
        Rational lhs_num = sys.rank(t) - sys.rank(mt);
        Rational rhs_num = sys.rank(jn) - sys.rank(s);
        Rational a_t = sys.coeff(t, e);
        Rational a_j = sys.coeff(jn, e);
        if (lhs_num * a_j > rhs_num * a_t) {
          Violation v;
          v.property = "P4";
          v.message = "weighted supermodularity fails";
          v.rows = {s.support(), t.support()};
          v.element = e;
          v.values = {lhs_num, a_t, rhs_num, a_j};
          report.violations.push_back(std::move(v));
        }
      }
    }
  }
  return report;
}

Rational compute_delta(const TruncatedSystem& tr, std::size_t budget) {
  const GreedySystem& sys = tr.base();
  std::vector<LatticeElement> rows = enumerate_rows(*sys.lattice, budget);
  LatticeElement top = sys.lattice->top();
  Rational delta(1);
  for (const auto& s : rows) {
    for (ElementId e : s.support()) {
      Rational ap = tr.coeff(s, e);
      if (ap.sign() <= 0) continue;
      bool eligible = sys.rank(sys.lattice->phi(s, e)).sign() >= 0 || ap == sys.coeff(s, e);
      if (!eligible) continue;
      delta = rational_max(delta, tr.coeff(top, e) / ap);
    }
  }
  return delta;
}

Rational compute_delta_naive(const TruncatedSystem& tr, std::size_t budget) {
  const GreedySystem& sys = tr.base();
  std::vector<LatticeElement> rows = enumerate_rows(*sys.lattice, budget);
  LatticeElement top = sys.lattice->top();
  Rational delta(1);
  for (const auto& s : rows)
    for (ElementId e : s.support()) {
      Rational ap = tr.coeff(s, e);
      if (ap.sign() > 0) delta = rational_max(delta, tr.coeff(top, e) / ap);
    }
  return delta;
}

int compute_b_flag(const TruncatedSystem& tr, std::size_t budget) {
  const GreedySystem& sys = tr.base();
  std::vector<LatticeElement> rows = enumerate_rows(*sys.lattice, budget);
  for (const auto& s : rows) {
    for (ElementId e : s.support()) {
      Rational ap = tr.coeff(s, e);
      if (ap.sign() <= 0) continue;
      Rational gap = tr.rank_plus(s) - tr.rank_plus(sys.lattice->phi(s, e));
      Rational q = gap / ap;
      if (!q.is_integer() || q.sign() < 0) return 2;
    }
  }
  return 1;
}

bool b_flag_pretest(const GreedySystem& sys, std::size_t budget) {
  std::vector<LatticeElement> rows = enumerate_rows(*sys.lattice, budget);
  for (const auto& s : rows)
    for (ElementId e : s.support()) {
      LatticeElement p = sys.lattice->phi(s, e);
      if (sys.rank(p).sign() < 0) continue;
      if (sys.coeff(s, e) < sys.rank(s) - sys.rank(p)) return false;
    }
  return true;
}

std::optional<Rational> beta_gamma_bound(const GreedySystem& sys,
                                         const std::vector<LatticeElement>& probe_rows,
                                         std::size_t budget) {
  std::vector<LatticeElement> rows =
      probe_rows.empty() ? enumerate_rows(*sys.lattice, budget) : probe_rows;
  LatticeElement top = sys.lattice->top();
  Rational beta(1), gamma(0);
  bool gamma_set = false;
  for (const auto& s : rows) {
    for (ElementId e : s.support()) {
      Rational a = sys.coeff(s, e);
      if (a.sign() <= 0) continue;
      beta = rational_max(beta, sys.coeff(top, e) / a);
      Rational gap = sys.rank(s) - sys.rank(sys.lattice->phi(s, e));
      if (gap.sign() <= 0) return std::nullopt;  // unbounded gamma
      gamma = gamma_set ? rational_max(gamma, a / gap) : a / gap;
      gamma_set = true;
    }
  }
  if (!gamma_set) return Rational(1);
  return beta * gamma;
}

}  // namespace pdcover
