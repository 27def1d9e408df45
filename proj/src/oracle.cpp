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

#include "pdcover/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace pdcover {

namespace {

struct DfsState {
  const std::vector<ExplicitRow>* rows;
  const std::vector<Rational>* costs;
  const Box* box;
  int m = 0;
  // coeff_by_elem[e] lists (row index, coefficient) pairs.
  std::vector<std::vector<std::pair<int, Rational>>> coeff_by_elem;
  std::vector<Rational> lhs;     // per row, running left-hand side
  std::vector<Rational> maxadd;  // per row, best possible addition from the tail
  std::vector<long long> current;
  OracleResult result;

  void run() {
    current.assign(m, 0);
    dfs(0, Rational(0));
  }

  void dfs(int idx, Rational partial_cost) {
    ++result.nodes_enumerated;
    if (result.feasible && partial_cost >= result.opt_value) return;
    if (idx == m) {
      for (std::size_t r = 0; r < rows->size(); ++r)
        if (lhs[r] < (*rows)[r].rank) return;
      if (!result.feasible || partial_cost < result.opt_value) {
        result.feasible = true;
        result.opt_value = partial_cost;
        result.argmin = current;
      }
      return;
    }
    // A row that cannot be repaired by the remaining variables prunes the
    // whole subtree.
    for (std::size_t r = 0; r < rows->size(); ++r)
      if (lhs[r] + maxadd[r] < (*rows)[r].rank) return;
    for (long long v = 0; v <= box->upper[idx]; ++v) {
      current[idx] = v;
      Rational vr(static_cast<long>(v));
      for (const auto& [r, a] : coeff_by_elem[idx]) {
        lhs[r] += a * vr;
        maxadd[r] -= a * Rational(static_cast<long>(box->upper[idx]));
      }
      dfs(idx + 1, partial_cost + (*costs)[idx] * vr);
      for (const auto& [r, a] : coeff_by_elem[idx]) {
        lhs[r] -= a * vr;
        maxadd[r] += a * Rational(static_cast<long>(box->upper[idx]));
      }
    }
    current[idx] = 0;
  }
};

}  // namespace

unsigned long long Box::volume() const {
  unsigned long long v = 1;
  for (long long u : upper) {
    if (u < 0) throw std::invalid_argument("Box: negative upper bound");
    unsigned long long w = static_cast<unsigned long long>(u) + 1;
    if (v > (~0ULL) / w) return ~0ULL;
    v *= w;
  }
  return v;
}

std::vector<ExplicitRow> explicit_rows(const GreedySystem& sys, std::size_t budget) {
  std::vector<ExplicitRow> out;
  for (const auto& row : enumerate_rows(*sys.lattice, budget)) {
    ExplicitRow er;
    er.support = row.support();
    for (ElementId e : er.support) er.coeffs.push_back(sys.coeff(row, e));
    er.rank = sys.rank(row);
    out.push_back(std::move(er));
  }
  return out;
}

std::vector<ExplicitRow> explicit_rows(const TruncatedSystem& tr, std::size_t budget) {
  std::vector<ExplicitRow> out;
  for (const auto& row : enumerate_rows(*tr.base().lattice, budget)) {
    ExplicitRow er;
    er.support = row.support();
    for (ElementId e : er.support) er.coeffs.push_back(tr.coeff(row, e));
    er.rank = tr.rank(row);
    out.push_back(std::move(er));
  }
  return out;
}

Box compute_box(const std::vector<ExplicitRow>& rows, int ground_size) {
  Box box;
  box.upper.assign(ground_size, 0);
  for (const auto& row : rows) {
    Rational rp = row.rank.positive_part();
    if (rp.is_zero()) continue;
    for (std::size_t k = 0; k < row.support.size(); ++k) {
      if (row.coeffs[k].sign() <= 0) continue;
      long long need = (rp / row.coeffs[k]).ceil_to_int();
      box.upper[row.support[k]] = std::max(box.upper[row.support[k]], need);
    }
  }
  return box;
}

bool rows_feasible(const std::vector<ExplicitRow>& rows, const std::vector<long long>& x) {
  for (const auto& row : rows) {
    Rational lhs(0);
    for (std::size_t k = 0; k < row.support.size(); ++k)
      if (x[row.support[k]] != 0)
        lhs += row.coeffs[k] * Rational(static_cast<long>(x[row.support[k]]));
    if (lhs < row.rank) return false;
  }
  return true;
}

OracleResult exact_opt_rows(const std::vector<ExplicitRow>& rows, const std::vector<Rational>& costs,
                            std::size_t budget) {
  const int m = static_cast<int>(costs.size());
  Box box = compute_box(rows, m);
  if (box.volume() > budget) throw BudgetExceeded("exact_opt: box exceeds the point budget");
  DfsState st;
  st.rows = &rows;
  st.costs = &costs;
  st.box = &box;
  st.m = m;
  st.coeff_by_elem.assign(m, {});
  st.lhs.assign(rows.size(), Rational(0));
  st.maxadd.assign(rows.size(), Rational(0));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t k = 0; k < rows[r].support.size(); ++k) {
      ElementId e = rows[r].support[k];
      st.coeff_by_elem[e].emplace_back(static_cast<int>(r), rows[r].coeffs[k]);
      st.maxadd[r] += rows[r].coeffs[k] * Rational(static_cast<long>(box.upper[e]));
    }
  st.run();
  return std::move(st.result);
}

OracleResult exact_opt(const GreedySystem& sys, std::size_t budget) {
  return exact_opt_rows(explicit_rows(sys, budget), sys.costs, budget);
}

namespace {

// Incremental odometer scan with integer arithmetic; requires every
// coefficient and rank to be integral (exactness is preserved, the values
// are promoted rationals). Returns nullopt when that precondition fails.
std::optional<EquivalenceResult> equivalence_scan_int(const std::vector<ExplicitRow>& original,
                                                      const std::vector<ExplicitRow>& truncated,
                                                      const Box& box, int m) {
  struct IntRow {
    std::vector<std::pair<int, long long>> entries;  // (element, coefficient)
    long long rank = 0;
    long long lhs = 0;
  };
  auto convert = [](const std::vector<ExplicitRow>& rows, std::vector<IntRow>* out) {
    for (const auto& row : rows) {
      IntRow ir;
      if (!row.rank.is_integer()) return false;
      ir.rank = row.rank.floor_to_int();
      for (std::size_t k = 0; k < row.support.size(); ++k) {
        if (!row.coeffs[k].is_integer()) return false;
        ir.entries.emplace_back(row.support[k], row.coeffs[k].floor_to_int());
      }
      out->push_back(std::move(ir));
    }
    return true;
  };
  std::vector<IntRow> rows[2];
  if (!convert(original, &rows[0]) || !convert(truncated, &rows[1])) return std::nullopt;

  std::vector<std::vector<std::pair<int, long long>>> by_elem[2];
  int violated[2] = {0, 0};
  for (int side = 0; side < 2; ++side) {
    by_elem[side].assign(m, {});
    for (std::size_t r = 0; r < rows[side].size(); ++r) {
      for (const auto& [e, a] : rows[side][r].entries)
        by_elem[side][e].emplace_back(static_cast<int>(r), a);
      if (rows[side][r].lhs < rows[side][r].rank) ++violated[side];
    }
  }
  auto bump = [&rows, &by_elem, &violated](int side, int e, long long delta) {
    for (const auto& [r, a] : by_elem[side][e]) {
      IntRow& row = rows[side][r];
      bool was = row.lhs < row.rank;
      row.lhs += a * delta;
      bool is = row.lhs < row.rank;
      if (was != is) violated[side] += is ? 1 : -1;
    }
  };
  std::vector<long long> x(m, 0);
  while (true) {
    if ((violated[0] == 0) != (violated[1] == 0)) return EquivalenceResult{false, x};
    int i = 0;
    while (i < m && x[i] == box.upper[i]) {
      bump(0, i, -x[i]);
      bump(1, i, -x[i]);
      x[i++] = 0;
    }
    if (i == m) break;
    ++x[i];
    bump(0, i, 1);
    bump(1, i, 1);
  }
  return EquivalenceResult{true, std::nullopt};
}

}  // namespace

EquivalenceResult truncation_equivalence(const GreedySystem& sys, const TruncatedSystem& tr,
                                         std::size_t budget) {
  std::vector<ExplicitRow> original = explicit_rows(sys, budget);
  std::vector<ExplicitRow> truncated = explicit_rows(tr, budget);
  Box box = compute_box(original, sys.ground_size());
  if (box.volume() > budget)
    throw BudgetExceeded("truncation_equivalence: box exceeds the point budget");
  const int m = sys.ground_size();
  if (auto fast = equivalence_scan_int(original, truncated, box, m)) return *fast;
  std::vector<long long> x(m, 0);
  while (true) {
    if (rows_feasible(original, x) != rows_feasible(truncated, x)) return {false, x};
    int i = 0;
    while (i < m && x[i] == box.upper[i]) x[i++] = 0;
    if (i == m) break;
    ++x[i];
  }
  return {true, std::nullopt};
}

Rational approximation_ratio(const RunResult& run, const OracleResult& opt) {
  if (!opt.feasible) throw std::logic_error("approximation_ratio: oracle found no feasible point");
  if (run.dual_value > opt.opt_value)
    throw std::logic_error("approximation_ratio: weak duality violated");
  if (opt.opt_value.is_zero()) {
    if (run.primal_cost.sign() > 0)
      throw std::logic_error("approximation_ratio: zero optimum with positive greedy cost");
    return Rational(1);
  }
  return run.primal_cost / opt.opt_value;
}

}  // namespace pdcover
