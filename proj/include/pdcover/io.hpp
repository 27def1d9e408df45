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

#ifndef PDCOVER_IO_HPP_
#define PDCOVER_IO_HPP_

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pdcover/apps.hpp"
#include "pdcover/oracle.hpp"
#include "pdcover/product.hpp"
#include "pdcover/solver.hpp"

namespace pdcover::io {

using Json = nlohmann::ordered_json;

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A loaded instance: exactly one of the plain or product system is set.
struct Instance {
  std::string format;
  std::string adapter;
  std::vector<std::string> element_names;
  std::optional<GreedySystem> plain;
  std::optional<ProductSystem> product;

  bool is_product() const { return product.has_value(); }
  const Declarations& declared() const {
    return is_product() ? product->declared : plain->declared;
  }
};

// Rationals appear as decimal strings ("2.5"), fraction strings ("5/2") or
// JSON integers; non-integral JSON numbers are rejected to keep everything
// exact.
Rational parse_rational(const Json& v);
Json rational_out(const Rational& r);

Instance parse_instance(const Json& j);
Instance load_instance(const std::string& path);

// Standalone lattice fragment: {"elements": [[support ids]...],
// "covers": [[lo_idx, hi_idx]...]}; indices refer to positions in
// "elements". Omitted covers default to support inclusion.
ExplicitLattice parse_lattice_fragment(const Json& j);

// ---------------------------------------------------------------------------
// Result serialization.

Json run_result_json(const RunResult& run, const TruncatedSystem& tr,
                     const std::optional<Certificate>& cert,
                     const std::vector<std::string>& names);
Json product_run_json(const ProductRunResult& run, const ProductTruncation& tr,
                      const std::optional<WitnessReport>& witness,
                      const std::optional<ProductCertificate>& cert,
                      const std::vector<std::string>& names);
Json oracle_json(const OracleResult& result, const std::vector<std::string>& names);
Json validation_json(const ValidationReport& report, const std::vector<std::string>& names);

// ---------------------------------------------------------------------------
// Instance emitters, shared by the generators.

struct ExplicitRowSpec {
  std::vector<int> support;           // element ids
  std::vector<Rational> coeffs;       // parallel to support
  Rational rank;
};

Json emit_explicit_system(const std::vector<std::string>& names,
                          const std::vector<Rational>& costs,
                          const std::vector<ExplicitRowSpec>& rows);
Json emit_product_explicit(const std::vector<std::string>& names,
                           const std::vector<Rational>& costs,
                           const std::vector<std::vector<int>>& u_sets,
                           const std::string& orders,
                           const std::vector<std::vector<int>>& lsets,
                           const std::vector<std::vector<Rational>>& ranks);
Json emit_knapsack(const apps::KnapsackInstance& inst);
Json emit_subsetcover(const apps::SubsetCoverInstance& inst);
Json emit_flowcover(const apps::FlowCoverInstance& inst);
Json emit_multicut(const apps::MulticutInstance& inst);
Json emit_precknap(const apps::PrecedenceKnapsackInstance& inst);
Json emit_polymatroid_cardinality(int n, const std::vector<Rational>& g, const Rational& shift,
                                  const std::vector<Rational>& costs);

}  // namespace pdcover::io

#endif  // PDCOVER_IO_HPP_
