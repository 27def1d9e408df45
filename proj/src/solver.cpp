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

#include "pdcover/solver.hpp"

#include <algorithm>
#include <set>

namespace pdcover {

namespace {

std::vector<Rational> to_rational(const std::vector<long long>& x) {
  std::vector<Rational> out;
  out.reserve(x.size());
  for (long long v : x) out.emplace_back(static_cast<long>(v));
  return out;
}

template <typename CoeffGetter>
FeasibilityReport scan_rows(const std::vector<LatticeElement>& rows, const RankFn& rank,
                            CoeffGetter coeff, const std::vector<Rational>& x) {
  for (const auto& row : rows) {
    Rational lhs(0);
    for (ElementId e : row.support()) {
      if (e < static_cast<ElementId>(x.size()) && !x[e].is_zero()) lhs += coeff(row, e) * x[e];
    }
    if (lhs < rank(row)) return {false, row};
  }
  return {true, std::nullopt};
}

}  // namespace

DualChain dual_phase(const TruncatedSystem& tr) {
  const GreedySystem& sys = tr.base();
  DualChain chain;
  LatticeElement s = sys.lattice->top();
  chain.rows.push_back(s);
  std::vector<Rational> load(sys.ground_size(), Rational(0));
  std::set<ElementId> picked;
  while (tr.rank(s).sign() > 0) {
    // Smallest-id argmin of slack(e) / a'(S,e); an element with zero slack
    // is an immediate bottleneck regardless of its truncated coefficient.
    std::optional<Rational> eps;
    ElementId best = -1;
    for (ElementId e : s.support()) {
      if (picked.count(e)) continue;
      Rational slack = sys.costs[e] - load[e];
      Rational a = tr.coeff(s, e);
      Rational ratio;
      if (slack.is_zero()) {
        ratio = Rational(0);
      } else if (a.sign() > 0) {
        ratio = slack / a;
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
        Rational a = tr.coeff(s, e);
        if (a.sign() > 0) load[e] += a * *eps;
      }
    }
    chain.raises.push_back(*eps);
    chain.bottlenecks.push_back(best);
    picked.insert(best);
    s = sys.lattice->phi(s, best);
    chain.rows.push_back(s);
  }
  return chain;
}

std::vector<long long> primal_phase(const TruncatedSystem& tr, const DualChain& chain) {
  std::vector<long long> x(tr.base().ground_size(), 0);
  for (std::size_t j = 0; j < chain.length(); ++j) {
    Rational gap = tr.rank_plus(chain.rows[j]) - tr.rank_plus(chain.rows[j + 1]);
    if (gap.sign() <= 0) continue;
    Rational a = tr.coeff(chain.rows[j], chain.bottlenecks[j]);
    x[chain.bottlenecks[j]] = (gap / a).ceil_to_int();
  }
  return x;
}

RunResult solve_truncated(const TruncatedSystem& tr) {
  RunResult run;
  run.chain = dual_phase(tr);
  run.x = primal_phase(tr, run.chain);
  run.dual_value = Rational(0);
  for (std::size_t i = 0; i < run.chain.length(); ++i) {
    if (run.chain.raises[i].sign() > 0) {
      run.y.emplace_back(run.chain.rows[i], run.chain.raises[i]);
      run.dual_value += run.chain.raises[i] * tr.rank(run.chain.rows[i]);
    }
  }
  run.primal_cost = Rational(0);
  for (ElementId e = 0; e < tr.base().ground_size(); ++e)
    if (run.x[e] != 0) run.primal_cost += tr.base().costs[e] * Rational(static_cast<long>(run.x[e]));
  return run;
}

RunResult solve(const GreedySystem& sys) { return solve_truncated(truncate(sys)); }

FeasibilityReport check_feasibility(const GreedySystem& sys, const std::vector<long long>& x,
                                    std::size_t budget) {
  auto rows = sys.lattice->enumerate(budget);
  if (!rows) {
    if (sys.separation) {
      auto violated = sys.separation(x);
      if (violated) return {false, *violated};
      return {true, std::nullopt};
    }
    throw BudgetExceeded("check_feasibility: lattice too large and no separation routine");
  }
  return scan_rows(
      *rows, sys.rank, [&](const LatticeElement& s, ElementId e) { return sys.coeff(s, e); },
      to_rational(x));
}

FeasibilityReport check_feasibility(const TruncatedSystem& tr, const std::vector<long long>& x,
                                    std::size_t budget) {
  return check_feasibility_fractional(tr, to_rational(x), budget);
}

FeasibilityReport check_feasibility_fractional(const GreedySystem& sys,
                                               const std::vector<Rational>& x,
                                               std::size_t budget) {
  auto rows = sys.lattice->enumerate(budget);
  if (!rows) throw BudgetExceeded("check_feasibility_fractional: lattice too large");
  return scan_rows(
      *rows, sys.rank, [&](const LatticeElement& s, ElementId e) { return sys.coeff(s, e); }, x);
}

FeasibilityReport check_feasibility_fractional(const TruncatedSystem& tr,
                                               const std::vector<Rational>& x,
                                               std::size_t budget) {
  auto rows = tr.base().lattice->enumerate(budget);
  if (!rows) throw BudgetExceeded("check_feasibility: lattice too large for the truncated scan");
  return scan_rows(
      *rows, [&](const LatticeElement& s) { return tr.rank(s); },
      [&](const LatticeElement& s, ElementId e) { return tr.coeff(s, e); }, x);
}

std::vector<Rational> dual_loads(const TruncatedSystem& tr, const DualChain& chain) {
  std::vector<Rational> load(tr.base().ground_size(), Rational(0));
  for (std::size_t i = 0; i < chain.length(); ++i) {
    if (chain.raises[i].sign() <= 0) continue;
    for (ElementId e : chain.rows[i].support()) load[e] += tr.coeff(chain.rows[i], e) * chain.raises[i];
  }
  return load;
}

Certificate build_certificate(const RunResult& run, const TruncatedSystem& tr,
                              std::size_t budget) {
  const GreedySystem& sys = tr.base();
  Certificate cert;
  cert.rho = Rational(0);
  for (const auto& [row, raise] : run.y) {
    Rational lhs(0);
    for (ElementId e : row.support())
      if (run.x[e] != 0) lhs += tr.coeff(row, e) * Rational(static_cast<long>(run.x[e]));
    cert.rho = rational_max(cert.rho, lhs / tr.rank(row));
  }

  // Chain-restricted delta: numerators come from earlier chain rows instead
  // of the top row, exclusions follow the delta definition verbatim.
  cert.delta_effective = Rational(1);
  for (std::size_t j = 0; j < run.chain.length(); ++j) {
    const LatticeElement& sj = run.chain.rows[j];
    ElementId ej = run.chain.bottlenecks[j];
    Rational denom = tr.coeff(sj, ej);
    if (denom.sign() <= 0) continue;
    bool eligible = tr.rank(run.chain.rows[j + 1]).sign() >= 0 || denom == sys.coeff(sj, ej);
    if (!eligible) continue;
    for (std::size_t t = 0; t <= j; ++t)
      cert.delta_effective =
          rational_max(cert.delta_effective, tr.coeff(run.chain.rows[t], ej) / denom);
  }

  if (sys.declared.b_flag) {
    cert.b = *sys.declared.b_flag;
  } else {
    try {
      cert.b = compute_b_flag(tr, budget);
    } catch (const BudgetExceeded&) {
      cert.b = 2;
    }
  }
  if (sys.declared.rank_nonnegative) {
    cert.a = 0;
  } else {
    try {
      auto rows = enumerate_rows(*sys.lattice, budget);
      cert.a = 0;
      for (const auto& row : rows)
        if (sys.rank(row).sign() < 0) {
          cert.a = 1;
          break;
        }
    } catch (const BudgetExceeded&) {
      cert.a = 1;
    }
  }
  cert.guarantee = Rational(cert.b) * cert.delta_effective + Rational(cert.a);
  cert.slackness_identity = run.primal_cost <= cert.rho * run.dual_value;
  return cert;
}

}  // namespace pdcover
