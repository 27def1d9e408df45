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

#ifndef PDCOVER_APPS_HPP_
#define PDCOVER_APPS_HPP_

#include <functional>
#include <string>
#include <vector>

#include "pdcover/product.hpp"
#include "pdcover/system.hpp"

// Adapters that build greedy systems or greedy product systems for the
// supported applications. Several formulations are naturally stated with
// complement supports (rows indexed by the set of already-counted columns);
// those builders relabel the lattice by complement so the core solver
// always sees standard supports.
//
// The generalized Steiner tree application is documented but not built: its
// cut family is implicit in a graph and witnesses come from contracting the
// solution forest, which needs machinery outside this library's scope.

namespace pdcover::apps {

// Detectably unsatisfiable input (demand above the total weight, an
// uncoverable ground element, ...).
struct InfeasibleInstance : std::runtime_error {
  explicit InfeasibleInstance(const std::string& what) : std::runtime_error(what) {}
};

// ---------------------------------------------------------------------------
// Optimization over contra-polymatroids: min c^T x with
// sum_{e in S} x_e >= r(S) for all S, r monotone supermodular, r(empty) = 0.

struct ContraPolymatroidInstance {
  int n = 0;
  std::function<Rational(const std::vector<ElementId>&)> rank;  // sorted subsets
  std::vector<Rational> costs;
};

// Integer-valued rank oracles only; validated exhaustively for n <= 12.
GreedySystem build_contra_polymatroid(const ContraPolymatroidInstance& inst, bool validate = true);

// r(S) = g(|S|) - t over the Boolean lattice with binary coefficients;
// g convex non-decreasing and integral. t = 0 is a contra-polymatroid,
// t > 0 shifts the rank into negative territory at the bottom.
GreedySystem build_cardinality_system(int n, std::vector<Rational> g, Rational shift,
                                      std::vector<Rational> costs);

// ---------------------------------------------------------------------------
// Knapsack cover with multiplicities and optional convex-cost / concave-
// weight marginals, on the ring family induced by chains of item copies.

struct KnapsackItem {
  KnapsackItem() = default;
  KnapsackItem(Rational w, Rational c, long long d = 1)
      : weight(std::move(w)), cost(std::move(c)), multiplicity(d) {}

  Rational weight;
  Rational cost;
  long long multiplicity = 1;
  // Optional marginal sequences; when present their length is the
  // multiplicity, costs non-decreasing and weights non-increasing.
  std::vector<Rational> cost_marginals;
  std::vector<Rational> weight_marginals;
};

struct KnapsackInstance {
  std::vector<KnapsackItem> items;
  Rational demand;
};

struct KnapsackBuild {
  GreedySystem system;
  // column id -> (item index, copy number starting at 1)
  std::vector<std::pair<int, int>> copy_of;
};

KnapsackBuild build_knapsack_cover(const KnapsackInstance& inst);

// Aggregates a per-copy solution back to per-item multiplicities.
std::vector<long long> knapsack_item_counts(const KnapsackBuild& build,
                                            const std::vector<long long>& x);

// ---------------------------------------------------------------------------
// Subset cover: ground set G, subsets T_i with costs, minimum-cost cover.
// Rows S over set indices with constant column weights |T_i| and rank
// r(S) = |G| - |union of T_i outside S|.

struct SubsetCoverInstance {
  int ground_size = 0;
  std::vector<std::vector<int>> sets;
  std::vector<Rational> costs;
};

GreedySystem build_subset_cover(const SubsetCoverInstance& inst);

// ---------------------------------------------------------------------------
// Intersection of p contra-polymatroids on a shared ground set; the U family
// holds p copies of E indexed by position.

ProductSystem build_intersection(const std::vector<ContraPolymatroidInstance>& insts,
                                 bool validate = true);

// ---------------------------------------------------------------------------
// Flow cover on k lines: edges with demands, candidate subpaths with weight
// and cost, one U member per edge carrying its demand.

struct FlowCoverInstance {
  std::vector<std::vector<int>> paths;  // sequences of edge ids
  std::vector<Rational> demands;        // per edge id
  struct Candidate {
    int path = 0;
    int from = 0;  // inclusive positions on the path
    int to = 0;
    Rational weight;
    Rational cost;
  };
  std::vector<Candidate> candidates;
};

struct FlowCoverBuild {
  ProductSystem system;
  int k = 1;                // max number of paths through an edge
  std::vector<int> u_edge;  // U index -> edge id
  // Interval endpoints of each candidate on its owning path: candidate e
  // covers edge position t iff span[e].first <= t <= span[e].second. The
  // witness search scans the U family in edge order, which walks these
  // intervals left to right; witness covers of size at most 2 per line
  // follow from the interval structure.
  std::vector<std::pair<int, int>> spans;
};

FlowCoverBuild build_flow_cover_lines(const FlowCoverInstance& inst);

// ---------------------------------------------------------------------------
// Knapsack cover with precedence constraints: find an ideal of the DAG with
// weight at least D. Rows are the frontier sets P(A) of ideals lighter than
// the demand; the truncation is binary and the witness-cover size is bounded
// by the width of the DAG.

struct PrecedenceKnapsackInstance {
  std::vector<Rational> weights;
  std::vector<Rational> costs;
  std::vector<std::pair<int, int>> arcs;  // (i, j): i precedes j
  Rational demand;
};

struct PrecedenceKnapsackBuild {
  ProductSystem system;
  int width = 0;
  std::vector<std::vector<ElementId>> frontiers;  // U index -> P(A)
};

PrecedenceKnapsackBuild build_precedence_knapsack(const PrecedenceKnapsackInstance& inst,
                                                  std::size_t budget = 100'000);

// ---------------------------------------------------------------------------
// Minimum multicut on trees: disconnect every terminal pair, U holds the
// pair paths ordered by the depth of their least common ancestor (deepest
// first).

struct MulticutInstance {
  int num_vertices = 0;
  struct Edge {
    int a = 0;
    int b = 0;
    Rational cost;
  };
  std::vector<Edge> edges;
  std::vector<std::pair<int, int>> pairs;
  int root = 0;
};

struct MulticutBuild {
  ProductSystem system;
  std::vector<int> lca_depth;  // per pair
};

MulticutBuild build_multicut_tree(const MulticutInstance& inst);

// ---------------------------------------------------------------------------
// Shared helper for the binary cut-style product systems (rank 1 - |U \ S|,
// unit coefficients on U intersect S, Boolean lattice).

ProductSystem make_unit_cover_product(int ground_size,
                                      std::vector<std::vector<ElementId>> u_sets,
                                      std::vector<Rational> costs, ULeqFn u_leq);

// Per-U restriction of a product system as a plain greedy system view;
// supports in the restriction follow the product row supports U intersect S.
ValidationReport validate_product_properties(const ProductSystem& ps,
                                             std::size_t budget = 10'000'000);

}  // namespace pdcover::apps

#endif  // PDCOVER_APPS_HPP_
