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

#include "pdcover/product.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace pdcover {

namespace {

Rational row_lhs(const ProductTruncation& tr, int u, const LatticeElement& s,
                 const std::vector<long long>& x) {
  Rational lhs(0);
  for (ElementId e : s.support())
    if (x[e] != 0) lhs += tr.coeff(u, s, e) * Rational(static_cast<long>(x[e]));
  return lhs;
}

bool is_witness_for(const ProductTruncation& tr, int u, const LatticeElement& s, ElementId e,
                    const std::vector<long long>& x) {
  if (x[e] <= 0) return false;
  Rational a = tr.coeff(u, s, e);
  if (a.sign() <= 0) return false;
  Rational lhs = row_lhs(tr, u, s, x);
  Rational r = tr.rank(u, s);
  return lhs - a < r && r <= lhs;
}

}  // namespace

Rational ProductTruncation::coeff(int u, const LatticeElement& s, ElementId e) const {
  if (!s.contains(e)) return Rational(0);
  Rational a = ps_.coeff(u, s, e);
  if (a.sign() <= 0) return Rational(0);
  if (raw_) return a;
  Rational gap = rank_plus(u, s) - rank_plus(u, ps_.lattice->phi(s, e));
  if (gap.sign() < 0) gap = Rational(0);
  return rational_min(a, gap);
}

std::vector<TupleIndex> lex_max_tuples(const ProductTruncation& tr, const LatticeElement& s) {
  const ProductSystem& ps = tr.base();
  std::vector<int> best;
  Rational best_rank;
  for (int u = 0; u < ps.u_count(); ++u) {
    Rational r = ps.rank(u, s);
    if (best.empty() || r > best_rank) {
      best_rank = r;
      best = {u};
    } else if (r == best_rank) {
      best.push_back(u);
    }
  }
  std::vector<TupleIndex> out;
  for (int u : best) {
    bool maximal = true;
    for (int v : best) {
      if (v == u) continue;
      if (ps.u_leq(u, v, s) && !ps.u_leq(v, u, s)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(TupleIndex{u, s});
  }
  return out;
}

ProductRunResult revised_solve_truncated(const ProductTruncation& tr, bool run_cleanup,
                                         std::size_t budget) {
  const ProductSystem& ps = tr.base();
  ProductRunResult run;
  LatticeElement s = ps.lattice->top();
  std::vector<Rational> load(ps.ground_size(), Rational(0));
  std::set<ElementId> picked;
  std::vector<ElementId> order;
  run.x.assign(ps.ground_size(), 0);
  while (true) {
    std::vector<TupleIndex> maximal = lex_max_tuples(tr, s);
    Rational r_star = ps.rank(maximal.front().u, s);
    if (r_star.sign() <= 0) {
      run.final_row = s;
      break;
    }
    std::optional<Rational> eps;
    ElementId best = -1;
    for (ElementId e : s.support()) {
      if (picked.count(e)) continue;
      Rational total(0);
      for (const auto& t : maximal) total += tr.coeff(t.u, s, e);
      Rational slack = ps.costs[e] - load[e];
      Rational ratio;
      if (slack.is_zero()) {
        ratio = Rational(0);
      } else if (total.sign() > 0) {
        ratio = slack / total;
      } else {
        continue;
      }
      if (!eps || ratio < *eps) {
        eps = ratio;
        best = e;
      }
    }
    if (best < 0) throw DualUnbounded(s);
    if (eps->sign() > 0) {
      for (ElementId e : s.support()) {
        Rational total(0);
        for (const auto& t : maximal) total += tr.coeff(t.u, s, e);
        if (total.sign() > 0) load[e] += total * *eps;
      }
      for (const auto& t : maximal) run.y.emplace_back(t.u, s, *eps);
    }
    LatticeElement next = ps.lattice->phi(s, best);
    // Line (d): cover the rank difference of every member of the family.
    Rational x_val(0);
    for (int u = 0; u < ps.u_count(); ++u) {
      Rational a = tr.coeff(u, s, best);
      if (a.sign() <= 0) continue;
      Rational gap = tr.rank_plus(u, s) - tr.rank_plus(u, next);
      if (gap.sign() <= 0) continue;
      x_val = rational_max(x_val, Rational(static_cast<long>((gap / a).ceil_to_int())));
    }
    run.x[best] = x_val.floor_to_int();

    ProductIteration it;
    it.s = s;
    for (const auto& t : maximal) it.raised.push_back(t.u);
    it.rank_value = r_star;
    it.epsilon = *eps;
    it.bottleneck = best;
    run.iterations.push_back(std::move(it));
    picked.insert(best);
    order.push_back(best);
    s = next;
  }
  run.x_pre_cleanup = run.x;
  run.primal_cost_pre_cleanup = Rational(0);
  for (ElementId e = 0; e < ps.ground_size(); ++e)
    if (run.x_pre_cleanup[e] != 0)
      run.primal_cost_pre_cleanup += ps.costs[e] * Rational(static_cast<long>(run.x_pre_cleanup[e]));
  if (run_cleanup) cleanup(tr, run.x, order, budget);
  run.dual_value = Rational(0);
  for (const auto& [u, row, val] : run.y) run.dual_value += val * ps.rank(u, row);
  run.primal_cost = Rational(0);
  for (ElementId e = 0; e < ps.ground_size(); ++e)
    if (run.x[e] != 0) run.primal_cost += ps.costs[e] * Rational(static_cast<long>(run.x[e]));
  return run;
}

ProductRunResult revised_solve(const ProductSystem& ps, bool run_cleanup, std::size_t budget) {
  return revised_solve_truncated(ProductTruncation::truncate(ps), run_cleanup, budget);
}

void cleanup(const ProductTruncation& tr, std::vector<long long>& x,
             const std::vector<ElementId>& bottleneck_order, std::size_t budget) {
  const ProductSystem& ps = tr.base();
  std::vector<LatticeElement> rows = enumerate_rows(*ps.lattice, budget);
  for (auto it = bottleneck_order.rbegin(); it != bottleneck_order.rend(); ++it) {
    ElementId e = *it;
    if (x[e] <= 0) continue;
    // Smallest feasible value in closed form: feasibility in x(e) is
    // monotone, so the max over rows of the residual requirement is exact.
    long long lower = 0;
    for (int u = 0; u < ps.u_count(); ++u) {
      for (const auto& s : rows) {
        Rational a = tr.coeff(u, s, e);
        if (a.sign() <= 0) continue;
        Rational residual = tr.rank(u, s) - (row_lhs(tr, u, s, x) - a * Rational(static_cast<long>(x[e])));
        if (residual.sign() <= 0) continue;
        lower = std::max(lower, (residual / a).ceil_to_int());
      }
    }
    x[e] = std::min(x[e], std::max<long long>(lower, 0));
  }
}

std::optional<TupleIndex> find_witness(const ProductTruncation& tr, const std::vector<long long>& x,
                                       ElementId e, std::size_t budget) {
  if (e < 0 || e >= tr.base().ground_size() || x[e] <= 0) return std::nullopt;
  std::vector<LatticeElement> rows = enumerate_rows(*tr.base().lattice, budget);
  for (int u = 0; u < tr.base().u_count(); ++u)
    for (const auto& s : rows)
      if (is_witness_for(tr, u, s, e, x)) return TupleIndex{u, s};
  return std::nullopt;
}

WitnessReport witness_cover_diagnostics(const ProductTruncation& tr, const ProductRunResult& run,
                                        std::size_t budget) {
  const ProductSystem& ps = tr.base();
  WitnessReport report;
  std::vector<LatticeElement> rows = enumerate_rows(*ps.lattice, budget);

  for (const auto& it : run.iterations) {
    ElementId e = it.bottleneck;
    if (run.x[e] > 0) report.witnesses.emplace_back(e, find_witness(tr, run.x, e, budget));
  }

  report.truncation_binary = true;
  for (int u = 0; u < ps.u_count() && report.truncation_binary; ++u)
    for (const auto& s : rows) {
      for (ElementId e : s.support()) {
        Rational a = tr.coeff(u, s, e);
        if (!a.is_zero() && a != Rational(1)) {
          report.truncation_binary = false;
          break;
        }
      }
      if (!report.truncation_binary) break;
    }

  // Candidate witnesses per element, shared across iterations.
  std::vector<std::pair<TupleIndex, std::vector<ElementId>>> witness_rows;
  for (int u = 0; u < ps.u_count(); ++u)
    for (const auto& s : rows) {
      std::vector<ElementId> covers;
      for (ElementId e : s.support())
        if (is_witness_for(tr, u, s, e, run.x)) covers.push_back(e);
      if (!covers.empty()) witness_rows.push_back({TupleIndex{u, s}, std::move(covers)});
    }

  report.k_observed = Rational(1);
  for (std::size_t i = 0; i < run.iterations.size(); ++i) {
    const auto& it = run.iterations[i];
    if (it.epsilon.sign() <= 0) continue;
    IterationDiagnostics diag;
    diag.iteration = i;
    diag.lhs = Rational(0);
    std::map<ElementId, int> need;
    for (int u : it.raised) {
      diag.lhs += row_lhs(tr, u, it.s, run.x);
      for (ElementId e : it.s.support()) {
        if (run.x[e] > 0 && tr.coeff(u, it.s, e).sign() > 0) ++need[e];
      }
    }
    // Greedy multicover over the witness rows of rank at most r*.
    std::map<ElementId, int> covered;
    std::set<std::size_t> chosen;
    bool progress = true;
    auto deficient = [&]() {
      for (const auto& [e, n] : need)
        if (covered[e] < n) return true;
      return false;
    };
    while (deficient() && progress) {
      progress = false;
      std::size_t best_row = 0;
      int best_gain = 0;
      for (std::size_t w = 0; w < witness_rows.size(); ++w) {
        if (chosen.count(w)) continue;
        if (ps.rank(witness_rows[w].first.u, witness_rows[w].first.s) > it.rank_value) continue;
        int gain = 0;
        for (ElementId e : witness_rows[w].second)
          if (need.count(e) && covered[e] < need[e]) ++gain;
        if (gain > best_gain) {
          best_gain = gain;
          best_row = w;
        }
      }
      if (best_gain > 0) {
        chosen.insert(best_row);
        diag.cover.push_back(witness_rows[best_row].first);
        for (ElementId e : witness_rows[best_row].second)
          if (need.count(e)) ++covered[e];
        progress = true;
      }
    }
    diag.cover_found = !deficient();
    if (!diag.cover_found) report.all_covers_found = false;
    if (diag.cover_found && !it.raised.empty()) {
      Rational ratio(static_cast<long>(diag.cover.size()), static_cast<long>(it.raised.size()));
      report.k_observed = rational_max(report.k_observed, ratio);
    }
    report.iterations.push_back(std::move(diag));
  }

  // Run-restricted delta: numerators at the lattice top over raised members,
  // denominators over raised and cover rows under the exclusion clause.
  report.delta_effective = Rational(1);
  {
    LatticeElement top = ps.lattice->top();
    std::set<int> raised_us;
    for (const auto& it : run.iterations)
      for (int u : it.raised) raised_us.insert(u);
    std::vector<std::pair<int, LatticeElement>> denoms;
    for (const auto& it : run.iterations)
      for (int u : it.raised) denoms.emplace_back(u, it.s);
    for (const auto& diag : report.iterations)
      for (const auto& t : diag.cover) denoms.emplace_back(t.u, t.s);
    for (const auto& [w, s] : denoms) {
      for (ElementId e : s.support()) {
        Rational a = tr.coeff(w, s, e);
        if (a.sign() <= 0) continue;
        bool eligible = ps.rank(w, ps.lattice->phi(s, e)).sign() >= 0 || a == ps.coeff(w, s, e);
        if (!eligible) continue;
        for (int u : raised_us) {
          Rational num = tr.coeff(u, top, e);
          if (num.sign() > 0) report.delta_effective = rational_max(report.delta_effective, num / a);
        }
      }
    }
  }
  return report;
}

FeasibilityReport check_feasibility(const ProductSystem& ps, const std::vector<long long>& x,
                                    std::size_t budget) {
  std::vector<LatticeElement> rows = enumerate_rows(*ps.lattice, budget);
  for (int u = 0; u < ps.u_count(); ++u)
    for (const auto& s : rows) {
      Rational lhs(0);
      for (ElementId e : s.support())
        if (x[e] != 0) lhs += ps.coeff(u, s, e) * Rational(static_cast<long>(x[e]));
      if (lhs < ps.rank(u, s)) return {false, s};
    }
  return {true, std::nullopt};
}

FeasibilityReport check_feasibility(const ProductTruncation& tr, const std::vector<long long>& x,
                                    std::size_t budget) {
  const ProductSystem& ps = tr.base();
  std::vector<LatticeElement> rows = enumerate_rows(*ps.lattice, budget);
  for (int u = 0; u < ps.u_count(); ++u)
    for (const auto& s : rows)
      if (row_lhs(tr, u, s, x) < tr.rank(u, s)) return {false, s};
  return {true, std::nullopt};
}

std::vector<ExplicitRow> explicit_rows(const ProductSystem& ps, std::size_t budget) {
  std::vector<ExplicitRow> out;
  for (int u = 0; u < ps.u_count(); ++u)
    for (const auto& s : enumerate_rows(*ps.lattice, budget)) {
      ExplicitRow er;
      for (ElementId e : s.support()) {
        Rational a = ps.coeff(u, s, e);
        if (a.sign() > 0) {
          er.support.push_back(e);
          er.coeffs.push_back(a);
        }
      }
      er.rank = ps.rank(u, s);
      out.push_back(std::move(er));
    }
  return out;
}

std::vector<ExplicitRow> explicit_rows(const ProductTruncation& tr, std::size_t budget) {
  const ProductSystem& ps = tr.base();
  std::vector<ExplicitRow> out;
  for (int u = 0; u < ps.u_count(); ++u)
    for (const auto& s : enumerate_rows(*ps.lattice, budget)) {
      ExplicitRow er;
      for (ElementId e : s.support()) {
        Rational a = tr.coeff(u, s, e);
        if (a.sign() > 0) {
          er.support.push_back(e);
          er.coeffs.push_back(a);
        }
      }
      er.rank = tr.rank(u, s);
      out.push_back(std::move(er));
    }
  return out;
}

OracleResult exact_opt(const ProductSystem& ps, std::size_t budget) {
  // The box comes from the original coefficients so clamping stays sound.
  return exact_opt_rows(explicit_rows(ps, budget), ps.costs, budget);
}

Rational product_delta(const ProductTruncation& tr, std::size_t budget) {
  const ProductSystem& ps = tr.base();
  std::vector<LatticeElement> rows = enumerate_rows(*ps.lattice, budget);
  LatticeElement top = ps.lattice->top();
  std::vector<Rational> num(ps.ground_size(), Rational(0));
  for (int u = 0; u < ps.u_count(); ++u)
    for (ElementId e : top.support()) num[e] = rational_max(num[e], tr.coeff(u, top, e));
  Rational delta(1);
  for (int w = 0; w < ps.u_count(); ++w)
    for (const auto& s : rows)
      for (ElementId e : s.support()) {
        Rational a = tr.coeff(w, s, e);
        if (a.sign() <= 0) continue;
        bool eligible = ps.rank(w, ps.lattice->phi(s, e)).sign() >= 0 || a == ps.coeff(w, s, e);
        if (!eligible) continue;
        if (num[e].sign() > 0) delta = rational_max(delta, num[e] / a);
      }
  return delta;
}

ProductCertificate build_product_certificate(const ProductRunResult& run,
                                             const WitnessReport& report,
                                             const ProductTruncation& tr, std::size_t budget) {
  const ProductSystem& ps = tr.base();
  ProductCertificate cert;
  cert.rho = Rational(0);
  for (const auto& [u, row, raise] : run.y) {
    Rational lhs = Rational(0);
    for (ElementId e : row.support())
      if (run.x[e] != 0) lhs += tr.coeff(u, row, e) * Rational(static_cast<long>(run.x[e]));
    cert.rho = rational_max(cert.rho, lhs / tr.rank(u, row));
  }
  cert.delta_effective = report.delta_effective;
  cert.k_observed = report.k_observed;
  cert.binary = report.truncation_binary;
  cert.b = cert.binary ? 1 : 2;
  cert.a = 1;
  try {
    auto rows = enumerate_rows(*ps.lattice, budget);
    cert.a = 0;
    for (int u = 0; u < ps.u_count() && cert.a == 0; ++u)
      for (const auto& s : rows)
        if (ps.rank(u, s).sign() < 0) {
          cert.a = 1;
          break;
        }
    if (!cert.binary) {
      cert.b = 1;
      for (int u = 0; u < ps.u_count() && cert.b == 1; ++u)
        for (const auto& s : rows) {
          bool bad = false;
          for (ElementId e : s.support()) {
            Rational a = tr.coeff(u, s, e);
            if (a.sign() <= 0) continue;
            Rational q = (tr.rank_plus(u, s) - tr.rank_plus(u, ps.lattice->phi(s, e))) / a;
            if (!q.is_integer() || q.sign() < 0) {
              bad = true;
              break;
            }
          }
          if (bad) {
            cert.b = 2;
            break;
          }
        }
    }
  } catch (const BudgetExceeded&) {
  }
  cert.guarantee =
      cert.binary ? cert.k_observed : cert.k_observed * (cert.delta_effective + Rational(1));
  cert.slackness_identity = run.primal_cost <= cert.rho * run.dual_value;
  return cert;
}

ProductSystem product_from_plain(const GreedySystem& sys) {
  ProductSystem ps;
  ps.lattice = sys.lattice;
  ps.u_sets = {sys.lattice->top().support()};
  ps.rank = [rank = sys.rank](int, const LatticeElement& s) { return rank(s); };
  ps.coeff = [coeff = sys.coeff](int, const LatticeElement& s, ElementId e) { return coeff(s, e); };
  ps.u_leq = [](int a, int b, const LatticeElement&) { return a == b; };
  ps.costs = sys.costs;
  ps.declared = sys.declared;
  return ps;
}

}  // namespace pdcover
