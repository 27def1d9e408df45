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

#include "pdcover/gen.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "pdcover/io.hpp"

namespace pdcover::gen {

namespace {

std::vector<Rational> random_costs(Rng& rng, int n, long long lo = 1, long long hi = 9) {
  std::vector<Rational> costs;
  for (int i = 0; i < n; ++i) costs.push_back(Rational(static_cast<long>(rng.pick(lo, hi))));
  return costs;
}

Rational pow2(int k) {
  Rational r(1);
  for (int i = 0; i < k; ++i) r *= Rational(2);
  return r;
}

GreedySystem explicit_from_tables(std::vector<std::vector<ElementId>> supports,
                                  std::vector<std::map<ElementId, Rational>> coeffs,
                                  std::vector<Rational> ranks, std::vector<Rational> costs) {
  auto lat = std::make_shared<ExplicitLattice>(std::move(supports));
  auto coeff_tab = std::make_shared<std::vector<std::map<ElementId, Rational>>>(std::move(coeffs));
  auto rank_tab = std::make_shared<std::vector<Rational>>(std::move(ranks));
  GreedySystem sys;
  sys.lattice = lat;
  sys.coeff = [lat, coeff_tab](const LatticeElement& s, ElementId e) {
    const auto& row = (*coeff_tab)[lat->index_of(s)];
    auto it = row.find(e);
    return it == row.end() ? Rational(0) : it->second;
  };
  sys.rank = [lat, rank_tab](const LatticeElement& s) { return (*rank_tab)[lat->index_of(s)]; };
  sys.costs = std::move(costs);
  return sys;
}

// The three necessity systems share the diamond shape over two elements.
GreedySystem necessity_system(Rational a_top_1, Rational a_top_2, Rational a_lo,
                              Rational rank_top, Rational rank_1, Rational rank_2,
                              Rational cost_1, Rational cost_2) {
  std::vector<std::vector<ElementId>> supports = {{0, 1}, {0}, {1}, {}};
  std::vector<std::map<ElementId, Rational>> coeffs = {
      {{0, a_top_1}, {1, a_top_2}}, {{0, a_lo}}, {{1, a_lo}}, {}};
  std::vector<Rational> ranks = {rank_top, rank_1, rank_2, Rational(0)};
  return explicit_from_tables(std::move(supports), std::move(coeffs), std::move(ranks),
                              {cost_1, cost_2});
}

}  // namespace

CardinalityInstance make_cardinality(int n, std::uint64_t seed, bool allow_shift) {
  Rng rng(seed);
  CardinalityInstance inst;
  inst.n = n;
  inst.g.assign(n + 1, Rational(0));
  Rational inc(static_cast<long>(rng.pick(0, 2)));
  for (int k = 1; k <= n; ++k) {
    inst.g[k] = inst.g[k - 1] + inc;
    inc += Rational(static_cast<long>(rng.pick(0, 2)));
  }
  inst.shift = allow_shift ? Rational(static_cast<long>(rng.pick(0, 2))) : Rational(0);
  inst.costs = random_costs(rng, n);
  return inst;
}

GreedySystem build_cardinality_system(const CardinalityInstance& inst) {
  return apps::build_cardinality_system(inst.n, inst.g, inst.shift, inst.costs);
}

apps::KnapsackInstance make_knapsack(int n, std::uint64_t seed, bool allow_variants) {
  Rng rng(seed);
  apps::KnapsackInstance inst;
  Rational total(0);
  for (int i = 0; i < n; ++i) {
    apps::KnapsackItem item;
    if (allow_variants && rng.chance(30)) {
      int d = static_cast<int>(rng.pick(2, 3));
      Rational c(static_cast<long>(rng.pick(1, 5)));
      Rational w(static_cast<long>(rng.pick(3, 9)));
      for (int j = 0; j < d; ++j) {
        item.cost_marginals.push_back(c);
        item.weight_marginals.push_back(w);
        c += Rational(static_cast<long>(rng.pick(0, 3)));
        w -= Rational(static_cast<long>(rng.pick(0, 2)));
        if (w.sign() <= 0) w = Rational(1);
      }
      item.multiplicity = d;
      item.weight = item.weight_marginals.front();
      item.cost = item.cost_marginals.front();
      for (const auto& w2 : item.weight_marginals) total += w2;
    } else {
      item.weight = Rational(static_cast<long>(rng.pick(1, 9)));
      item.cost = Rational(static_cast<long>(rng.pick(1, 9)));
      item.multiplicity = rng.pick(1, 3);
      total += item.weight * Rational(static_cast<long>(item.multiplicity));
    }
    inst.items.push_back(std::move(item));
  }
  long long percent = rng.pick(40, 70);
  Rational d = total * Rational(static_cast<long>(percent), 100);
  long long demand = std::max<long long>(1, d.floor_to_int());
  inst.demand = Rational(static_cast<long>(demand));
  return inst;
}

apps::KnapsackInstance make_knapsack_boxed(int n, std::uint64_t seed, bool allow_variants) {
  Rng rng(seed);
  apps::KnapsackInstance inst;
  Rational total(0);
  int copies = 0;
  for (int i = 0; i < n; ++i) {
    apps::KnapsackItem item;
    bool variant = allow_variants && copies + 2 <= 9 && rng.chance(35);
    if (variant) {
      int d = static_cast<int>(rng.pick(2, std::min<long long>(3, 9 - copies)));
      Rational c(static_cast<long>(rng.pick(1, 5)));
      Rational w(static_cast<long>(rng.pick(5, 9)));
      for (int j = 0; j < d; ++j) {
        item.cost_marginals.push_back(c);
        item.weight_marginals.push_back(w);
        c += Rational(static_cast<long>(rng.pick(0, 3)));
        w -= Rational(static_cast<long>(rng.pick(0, 2)));
        if (w < Rational(3)) w = Rational(3);
      }
      item.multiplicity = d;
      item.weight = item.weight_marginals.front();
      item.cost = item.cost_marginals.front();
      for (const auto& w2 : item.weight_marginals) total += w2;
      copies += d;
    } else {
      item.weight = Rational(static_cast<long>(rng.pick(3, 9)));
      item.cost = Rational(static_cast<long>(rng.pick(1, 9)));
      item.multiplicity = copies + 2 <= 9 ? rng.pick(1, 2) : 1;
      copies += static_cast<int>(item.multiplicity);
      total += item.weight * Rational(static_cast<long>(item.multiplicity));
    }
    inst.items.push_back(std::move(item));
  }
  long long cap = std::min<long long>(12, total.floor_to_int());
  inst.demand = Rational(static_cast<long>(rng.pick(std::min<long long>(6, cap), cap)));
  return inst;
}

apps::SubsetCoverInstance make_subsetcover(int ground, std::uint64_t seed) {
  Rng rng(seed);
  apps::SubsetCoverInstance inst;
  inst.ground_size = ground;
  int nsets = static_cast<int>(rng.pick(std::max(2, ground - 1), ground + 1));
  std::vector<std::uint64_t> masks;
  for (int i = 0; i < nsets; ++i)
    masks.push_back(static_cast<std::uint64_t>(rng.pick(1, (1LL << ground) - 1)));
  std::uint64_t all = (~std::uint64_t{0}) >> (64 - ground);
  std::uint64_t covered = 0;
  for (auto m : masks) covered |= m;
  for (int g = 0; g < ground; ++g)
    if (!(covered >> g & 1)) masks[rng.pick(0, nsets - 1)] |= std::uint64_t{1} << g;
  (void)all;
  for (auto m : masks) {
    std::vector<int> members;
    for (int g = 0; g < ground; ++g)
      if (m >> g & 1) members.push_back(g);
    inst.sets.push_back(std::move(members));
  }
  inst.costs = random_costs(rng, nsets);
  return inst;
}

apps::FlowCoverInstance make_flowcover(int edges, std::uint64_t seed, int lines) {
  Rng rng(seed);
  apps::FlowCoverInstance inst;
  if (lines <= 1 || edges < 3) {
    std::vector<int> path(edges);
    std::iota(path.begin(), path.end(), 0);
    inst.paths.push_back(std::move(path));
  } else {
    // Two lines sharing the middle edge.
    int split = edges / 2;
    std::vector<int> first, second;
    for (int e = 0; e <= split; ++e) first.push_back(e);
    for (int e = split; e < edges; ++e) second.push_back(e);
    inst.paths.push_back(std::move(first));
    inst.paths.push_back(std::move(second));
  }
  for (int e = 0; e < edges; ++e)
    inst.demands.push_back(Rational(static_cast<long>(rng.pick(0, 9))));
  // One candidate per edge guarantees feasibility, plus random spans.
  for (std::size_t p = 0; p < inst.paths.size(); ++p) {
    const auto& path = inst.paths[p];
    for (int pos = 0; pos < static_cast<int>(path.size()); ++pos) {
      apps::FlowCoverInstance::Candidate c;
      c.path = static_cast<int>(p);
      c.from = c.to = pos;
      Rational need = inst.demands[path[pos]];
      c.weight = rational_max(Rational(static_cast<long>(rng.pick(3, 9))), need);
      c.cost = Rational(static_cast<long>(rng.pick(1, 9)));
      inst.candidates.push_back(std::move(c));
    }
    int extra = static_cast<int>(rng.pick(1, 2));
    for (int x = 0; x < extra; ++x) {
      int from = static_cast<int>(rng.pick(0, static_cast<long long>(path.size()) - 1));
      int to = static_cast<int>(rng.pick(from, static_cast<long long>(path.size()) - 1));
      apps::FlowCoverInstance::Candidate c;
      c.path = static_cast<int>(p);
      c.from = from;
      c.to = to;
      c.weight = Rational(static_cast<long>(rng.pick(3, 9)));
      c.cost = Rational(static_cast<long>(rng.pick(1, 9)));
      inst.candidates.push_back(std::move(c));
    }
  }
  return inst;
}

apps::MulticutInstance make_multicut(int edges, std::uint64_t seed) {
  Rng rng(seed);
  apps::MulticutInstance inst;
  inst.num_vertices = edges + 1;
  for (int v = 1; v <= edges; ++v) {
    apps::MulticutInstance::Edge e;
    e.a = static_cast<int>(rng.pick(0, v - 1));
    e.b = v;
    e.cost = Rational(static_cast<long>(rng.pick(1, 9)));
    inst.edges.push_back(std::move(e));
  }
  int pairs = static_cast<int>(rng.pick(1, 3));
  for (int p = 0; p < pairs; ++p) {
    int s = static_cast<int>(rng.pick(0, inst.num_vertices - 1));
    int t = static_cast<int>(rng.pick(0, inst.num_vertices - 2));
    if (t >= s) ++t;
    inst.pairs.emplace_back(s, t);
  }
  inst.root = 0;
  return inst;
}

apps::PrecedenceKnapsackInstance make_precknap(int n, std::uint64_t seed) {
  Rng rng(seed);
  apps::PrecedenceKnapsackInstance inst;
  Rational total(0);
  for (int i = 0; i < n; ++i) {
    inst.weights.push_back(Rational(static_cast<long>(rng.pick(1, 5))));
    inst.costs.push_back(Rational(static_cast<long>(rng.pick(1, 9))));
    total += inst.weights.back();
  }
  for (int j = 1; j < n; ++j)
    if (rng.chance(50)) inst.arcs.emplace_back(static_cast<int>(rng.pick(0, j - 1)), j);
  Rational d = total * Rational(static_cast<long>(rng.pick(40, 70)), 100);
  inst.demand = Rational(std::max<long>(1, static_cast<long>(d.floor_to_int())));
  return inst;
}

std::vector<apps::ContraPolymatroidInstance> make_intersection(int n, int p, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Rational> costs = random_costs(rng, n);
  std::vector<apps::ContraPolymatroidInstance> out;
  for (int i = 0; i < p; ++i) {
    auto g = std::make_shared<std::vector<Rational>>(n + 1, Rational(0));
    Rational inc(static_cast<long>(rng.pick(0, 2)));
    for (int k = 1; k <= n; ++k) {
      (*g)[k] = (*g)[k - 1] + inc;
      inc += Rational(static_cast<long>(rng.pick(0, 2)));
    }
    apps::ContraPolymatroidInstance inst;
    inst.n = n;
    inst.costs = costs;
    inst.rank = [g](const std::vector<ElementId>& s) { return (*g)[s.size()]; };
    out.push_back(std::move(inst));
  }
  return out;
}

apps::SubsetCoverInstance baddual_instance(int n, int M) {
  if (M < 0) M = n - 1;
  apps::SubsetCoverInstance inst;
  inst.ground_size = M + n;
  for (int i = 0; i < n; ++i) {
    std::vector<int> members;
    for (int g = 0; g < M; ++g) members.push_back(g);
    members.push_back(M + i);
    inst.sets.push_back(std::move(members));
    inst.costs.push_back(Rational(static_cast<long>(M) + 1));
  }
  return inst;
}

GreedySystem lineargap_system(int n) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("lineargap: n must be even and >= 2");
  // r(S) = 2^n (2^{|S|-n} - 2^{-n/2}) = 2^{|S|} - 2^{n/2}, integral for even n.
  Rational offset = pow2(n / 2);
  Rational weight = pow2(n);
  auto rank = [offset](const LatticeElement& s) {
    return pow2(static_cast<int>(s.support_size())) - offset;
  };
  GreedySystem sys;
  sys.lattice = std::make_shared<BooleanLattice>(n);
  sys.coeff = [weight](const LatticeElement& s, ElementId e) {
    return s.contains(e) ? weight : Rational(0);
  };
  sys.rank = rank;
  sys.costs.assign(n, Rational(1));
  sys.declared.properties_certified = true;
  sys.declared.note = "symmetric convex cardinality rank with uniform weights";
  return sys;
}

GreedySystem p1cex_system() {
  // Rank is not monotone: the left singleton row has rank -2.
  return necessity_system(Rational(1), Rational(1), Rational(1), Rational(2), Rational(-2),
                          Rational(1), Rational(2), Rational(1));
}

GreedySystem p2cex_system() {
  // Columns are not monotone: singleton coefficients 5 above the top's 1.
  return necessity_system(Rational(1), Rational(1), Rational(5), Rational(10), Rational(5),
                          Rational(5), Rational(1), Rational(6));
}

GreedySystem p4cex_system() {
  // Weighted supermodularity fails: singleton coefficients 5/2.
  return necessity_system(Rational(5), Rational(5), Rational(5, 2), Rational(10), Rational(5),
                          Rational(5), Rational(5), Rational(6));
}

apps::KnapsackInstance knapgap_instance(long long D) {
  if (D < 2) throw std::invalid_argument("knapgap: D must be at least 2");
  apps::KnapsackInstance inst;
  apps::KnapsackItem big;
  big.weight = Rational(static_cast<long>(D));
  big.cost = Rational(static_cast<long>(D));
  apps::KnapsackItem small;
  small.weight = Rational(static_cast<long>(D - 1));
  small.cost = Rational(1);
  inst.items = {big, small};
  inst.demand = Rational(static_cast<long>(D));
  return inst;
}

ProductSystem kgap_system(int k) {
  if (k < 1) throw std::invalid_argument("kgap: k must be positive");
  std::vector<std::vector<ElementId>> u_sets;
  std::vector<ElementId> full(k);
  std::iota(full.begin(), full.end(), 0);
  u_sets.push_back(full);
  for (int i = 0; i < k; ++i) u_sets.push_back({i});
  auto shared_u = std::make_shared<std::vector<std::vector<ElementId>>>(u_sets);
  ProductSystem ps = apps::make_unit_cover_product(
      k, u_sets, std::vector<Rational>(k, Rational(1)),
      [shared_u](int a, int b, const LatticeElement&) {
        const auto& sa = (*shared_u)[a];
        const auto& sb = (*shared_u)[b];
        return a == b || std::includes(sb.begin(), sb.end(), sa.begin(), sa.end());
      });
  ps.declared.witness_cover_bound = Rational(k);
  ps.declared.ratio_bound = Rational(k);
  ps.declared.b_flag = 1;
  ps.declared.properties_certified = true;
  return ps;
}

ProductSystem starcleanup_system(int n) {
  if (n < 2) throw std::invalid_argument("starcleanup: n must be at least 2");
  // Edge i (0-based) joins s and v_{i+1} at cost i + 1; edge n - 1 reaches t.
  // Cuts are indexed by the inner vertices on the s side.
  std::vector<std::vector<ElementId>> u_sets;
  for (std::uint32_t w = 0; w < (std::uint32_t{1} << (n - 1)); ++w) {
    std::vector<ElementId> cut;
    for (int i = 0; i + 1 < n; ++i)
      if (!(w >> i & 1)) cut.push_back(i);
    cut.push_back(n - 1);
    u_sets.push_back(std::move(cut));
  }
  std::vector<Rational> costs;
  for (int i = 0; i < n; ++i) costs.push_back(Rational(static_cast<long>(i) + 1));
  auto shared_u = std::make_shared<std::vector<std::vector<ElementId>>>(u_sets);
  ProductSystem ps = apps::make_unit_cover_product(
      n, u_sets, std::move(costs),
      [shared_u](int a, int b, const LatticeElement&) {
        const auto& sa = (*shared_u)[a];
        const auto& sb = (*shared_u)[b];
        return a == b || std::includes(sb.begin(), sb.end(), sa.begin(), sa.end());
      });
  ps.declared.b_flag = 1;
  ps.declared.properties_certified = true;
  return ps;
}

namespace {

Json explicit_system_json(const GreedySystem& sys, const std::vector<std::string>& names) {
  auto rows = sys.lattice->enumerate(1 << 16);
  std::vector<io::ExplicitRowSpec> specs;
  for (const auto& row : *rows) {
    io::ExplicitRowSpec spec;
    for (ElementId e : row.support()) {
      spec.support.push_back(e);
      spec.coeffs.push_back(sys.coeff(row, e));
    }
    spec.rank = sys.rank(row);
    specs.push_back(std::move(spec));
  }
  return io::emit_explicit_system(names, sys.costs, specs);
}

Json product_unit_json(const ProductSystem& ps, const std::string& orders,
                       const std::vector<std::string>& names) {
  auto rows = ps.lattice->enumerate(1 << 16);
  std::vector<std::vector<int>> lsets;
  for (const auto& row : *rows)
    lsets.push_back(std::vector<int>(row.support().begin(), row.support().end()));
  std::vector<std::vector<int>> u_sets;
  for (const auto& u : ps.u_sets) u_sets.push_back(std::vector<int>(u.begin(), u.end()));
  std::vector<std::vector<Rational>> ranks;
  for (int u = 0; u < ps.u_count(); ++u) {
    std::vector<Rational> per_u;
    for (const auto& row : *rows) per_u.push_back(ps.rank(u, row));
    ranks.push_back(std::move(per_u));
  }
  return io::emit_product_explicit(names, ps.costs, u_sets, orders, lsets, ranks);
}

std::vector<std::string> numbered(const std::string& prefix, int n, int base = 0) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i + base));
  return names;
}

}  // namespace

Json gen_json(const std::string& family, int size, std::uint64_t seed) {
  if (family == "polymatroid-cardinality") {
    CardinalityInstance inst = make_cardinality(size, seed);
    return io::emit_polymatroid_cardinality(inst.n, inst.g, inst.shift, inst.costs);
  }
  if (family == "knapsack") return io::emit_knapsack(make_knapsack(size, seed));
  if (family == "subsetcover") return io::emit_subsetcover(make_subsetcover(size, seed));
  if (family == "flowcover") return io::emit_flowcover(make_flowcover(size, seed));
  if (family == "multicut") return io::emit_multicut(make_multicut(size, seed));
  if (family == "lineargap") return explicit_system_json(lineargap_system(size), numbered("e", size));
  if (family == "baddual") return io::emit_subsetcover(baddual_instance(size));
  if (family == "kgap") return product_unit_json(kgap_system(size), "inclusion", numbered("e", size, 1));
  if (family == "starcleanup")
    return product_unit_json(starcleanup_system(size), "inclusion", numbered("e", size, 1));
  if (family == "p1cex") return explicit_system_json(p1cex_system(), {"1", "2"});
  if (family == "p2cex") return explicit_system_json(p2cex_system(), {"1", "2"});
  if (family == "p4cex") return explicit_system_json(p4cex_system(), {"1", "2"});
  if (family == "knapgap") return io::emit_knapsack(knapgap_instance(size));
  throw std::invalid_argument("unknown family " + family);
}

}  // namespace pdcover::gen
