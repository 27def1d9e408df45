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

#ifndef PDCOVER_GEN_HPP_
#define PDCOVER_GEN_HPP_

#include <cstdint>
#include <random>
#include <string>

#include "json.hpp"
#include "pdcover/apps.hpp"

namespace pdcover::gen {

using Json = nlohmann::ordered_json;

// mt19937_64 output is pinned by the standard, so instances are
// reproducible byte for byte across platforms for a given seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  long long pick(long long lo, long long hi) {  // inclusive bounds
    return lo + static_cast<long long>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool chance(int percent) { return pick(0, 99) < percent; }

 private:
  std::mt19937_64 eng_;
};

// ---------------------------------------------------------------------------
// Random families. Each maker is deterministic in (size, seed).

// r(S) = g(|S|) - t with g convex, integral and non-decreasing; t = 0 keeps
// the instance a genuine contra-polymatroid.
struct CardinalityInstance {
  int n = 0;
  std::vector<Rational> g;  // g[0..n]
  Rational shift;
  std::vector<Rational> costs;
};

CardinalityInstance make_cardinality(int n, std::uint64_t seed, bool allow_shift = true);
GreedySystem build_cardinality_system(const CardinalityInstance& inst);  // apps helper wrapper

apps::KnapsackInstance make_knapsack(int n, std::uint64_t seed, bool allow_variants = true);
// Variant with weights >= 3 and demand capped at 12 so the exhaustive
// oracle's box stays small; used by the ratio suites.
apps::KnapsackInstance make_knapsack_boxed(int n, std::uint64_t seed, bool allow_variants = true);
apps::SubsetCoverInstance make_subsetcover(int ground, std::uint64_t seed);
apps::FlowCoverInstance make_flowcover(int edges, std::uint64_t seed, int lines = 1);
apps::MulticutInstance make_multicut(int edges, std::uint64_t seed);
apps::PrecedenceKnapsackInstance make_precknap(int n, std::uint64_t seed);
std::vector<apps::ContraPolymatroidInstance> make_intersection(int n, int p, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Exact constructions of the worked instances.

// Subset cover with G = {1..M+n}, T_i = {1..M, M+i}, costs M+1. The greedy
// dual stops after one raise while the optimum dual spreads over the
// co-singleton rows; default M = n - 1.
apps::SubsetCoverInstance baddual_instance(int n, int M = -1);

// Symmetric system on 2^E with a(S,e) = 2^n and r(S) = 2^n (2^{|S|-n} -
// 2^{-n/2}); its truncation has an integrality gap linear in n (n even).
GreedySystem lineargap_system(int n);

// The three property-necessity systems (rank monotonicity, column
// monotonicity, weighted supermodularity).
GreedySystem p1cex_system();
GreedySystem p2cex_system();
GreedySystem p4cex_system();

// Two items u = (D, D-1), c = (D, 1): the untruncated relaxation admits the
// point (1/D, 1) of cost 2 while the integer optimum is D.
apps::KnapsackInstance knapgap_instance(long long D);

// Product system with U = {E} and all singletons, unit ranks: one raise
// makes everything tight and the only witness cover has size k.
ProductSystem kgap_system(int k);

// Star graph cut cover with edge costs 1..n; without the cleanup phase the
// greedy keeps every edge.
ProductSystem starcleanup_system(int n);

// ---------------------------------------------------------------------------
// JSON instance files; byte-identical output per (family, size, seed).
// Families: polymatroid-cardinality, knapsack, subsetcover, flowcover,
// multicut, lineargap, baddual, kgap, starcleanup, p1cex, p2cex, p4cex,
// knapgap.
Json gen_json(const std::string& family, int size, std::uint64_t seed);

}  // namespace pdcover::gen

#endif  // PDCOVER_GEN_HPP_
