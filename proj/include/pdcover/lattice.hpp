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

#ifndef PDCOVER_LATTICE_HPP_
#define PDCOVER_LATTICE_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pdcover/rational.hpp"

namespace pdcover {

// Dense index into the ground set E, stable for the lifetime of an instance.
using ElementId = int;

struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct StructureError : std::runtime_error {
  explicit StructureError(const std::string& what) : std::runtime_error(what) {}
};

// A row index of the constraint family. Carries its support (sorted element
// ids) and, for explicitly enumerated lattices, the element's index as an
// opaque handle. Values are immutable and safe to share across threads.
class LatticeElement {
 public:
  LatticeElement() = default;
  explicit LatticeElement(std::vector<ElementId> support, long handle = -1);

  const std::vector<ElementId>& support() const { return support_; }
  long handle() const { return handle_; }
  bool contains(ElementId e) const;
  std::size_t support_size() const { return support_.size(); }

  bool operator==(const LatticeElement& o) const;
  bool operator!=(const LatticeElement& o) const { return !(*this == o); }
  bool operator<(const LatticeElement& o) const;  // order for map keys only

 private:
  std::vector<ElementId> support_;
  long handle_ = -1;
};

// The partially ordered row index family (L, ⪯) with join, meet, top and
// the phi operator phi(S,e) = max{T ⪯ S : e not in supp(T)}. Solvers only
// ever touch elements reachable from top via phi, so implementations may be
// implicit; enumerate() materializes small lattices for the validators.
class Lattice {
 public:
  virtual ~Lattice() = default;

  virtual int ground_size() const = 0;
  virtual LatticeElement top() const = 0;
  virtual LatticeElement bottom() const = 0;
  virtual LatticeElement join(const LatticeElement& a, const LatticeElement& b) const = 0;
  virtual LatticeElement meet(const LatticeElement& a, const LatticeElement& b) const = 0;
  virtual LatticeElement phi(const LatticeElement& s, ElementId e) const = 0;
  virtual bool leq(const LatticeElement& a, const LatticeElement& b) const = 0;

  // All elements, or nullopt when the lattice is too large for the budget.
  virtual std::optional<std::vector<LatticeElement>> enumerate(std::size_t budget) const = 0;
};

inline const std::vector<ElementId>& support(const Lattice&, const LatticeElement& s) {
  return s.support();
}

// L = 2^E. join is union, meet intersection, phi(S,e) = S \ {e}.
class BooleanLattice : public Lattice {
 public:
  explicit BooleanLattice(int n);

  int ground_size() const override { return n_; }
  LatticeElement top() const override;
  LatticeElement bottom() const override { return LatticeElement(std::vector<ElementId>{}); }
  LatticeElement join(const LatticeElement& a, const LatticeElement& b) const override;
  LatticeElement meet(const LatticeElement& a, const LatticeElement& b) const override;
  LatticeElement phi(const LatticeElement& s, ElementId e) const override;
  bool leq(const LatticeElement& a, const LatticeElement& b) const override;
  std::optional<std::vector<LatticeElement>> enumerate(std::size_t budget) const override;

 private:
  int n_;
};

// Ideals (predecessor-closed subsets) of a precedence DAG on E, ordered by
// inclusion. An arc (a, b) reads "a precedes b": any ideal containing b
// contains a. phi(S,e) removes e together with the up-set of e within S,
// i.e. every element whose presence forces e.
class IdealLattice : public Lattice {
 public:
  IdealLattice(int n, const std::vector<std::pair<ElementId, ElementId>>& arcs);

  int ground_size() const override { return n_; }
  LatticeElement top() const override;
  LatticeElement bottom() const override { return LatticeElement(std::vector<ElementId>{}); }
  LatticeElement join(const LatticeElement& a, const LatticeElement& b) const override;
  LatticeElement meet(const LatticeElement& a, const LatticeElement& b) const override;
  LatticeElement phi(const LatticeElement& s, ElementId e) const override;
  bool leq(const LatticeElement& a, const LatticeElement& b) const override;
  std::optional<std::vector<LatticeElement>> enumerate(std::size_t budget) const override;

  bool is_ideal(const std::vector<ElementId>& set) const;
  const std::vector<ElementId>& ancestors(ElementId e) const { return ancestors_[e]; }
  const std::vector<ElementId>& descendants(ElementId e) const { return descendants_[e]; }

 private:
  int n_;
  std::vector<std::vector<ElementId>> ancestors_;    // strict, sorted
  std::vector<std::vector<ElementId>> descendants_;  // strict, sorted
};

// Enumerated elements plus covering relation; ⪯ is the reflexive-transitive
// closure computed once at construction. Join/meet are found by search and
// fall back to the lowest-index candidate when the poset is not a lattice,
// so the validators can probe deliberately broken inputs.
class ExplicitLattice : public Lattice {
 public:
  // covers: pairs (lo, hi) of element indices with lo covered by hi.
  ExplicitLattice(std::vector<std::vector<ElementId>> supports,
                  const std::vector<std::pair<int, int>>& covers);
  // Order defaults to support inclusion.
  explicit ExplicitLattice(std::vector<std::vector<ElementId>> supports);

  int ground_size() const override { return ground_size_; }
  int size() const { return static_cast<int>(supports_.size()); }

  LatticeElement top() const override { return element(top_); }
  LatticeElement bottom() const override { return element(bottom_); }
  LatticeElement join(const LatticeElement& a, const LatticeElement& b) const override;
  LatticeElement meet(const LatticeElement& a, const LatticeElement& b) const override;
  LatticeElement phi(const LatticeElement& s, ElementId e) const override;
  bool leq(const LatticeElement& a, const LatticeElement& b) const override;
  std::optional<std::vector<LatticeElement>> enumerate(std::size_t budget) const override;

  LatticeElement element(int idx) const;
  int index_of(const LatticeElement& el) const;
  bool leq_idx(int i, int j) const;
  int join_idx(int i, int j) const;  // -1 when no upper bound exists
  int meet_idx(int i, int j) const;
  int phi_idx(int s, ElementId e) const;  // -1 when no candidate exists

  // Structural diagnostics gathered at construction.
  bool order_is_lattice() const { return order_is_lattice_; }
  bool has_duplicate_supports() const { return duplicate_supports_; }
  const std::string& structure_note() const { return structure_note_; }

 private:
  void finalize();

  int ground_size_ = 0;
  std::vector<std::vector<ElementId>> supports_;
  std::vector<std::vector<std::uint64_t>> up_;  // up_[i] bitset of j with i ⪯ j
  int top_ = -1;
  int bottom_ = -1;
  bool order_is_lattice_ = true;
  bool duplicate_supports_ = false;
  std::string structure_note_;
};

struct Violation {
  std::string property;  // one of "P1", "P2", "P3", "P4"
  std::string message;
  std::vector<std::vector<ElementId>> rows;  // supports of the rows involved
  ElementId element = -1;
  std::vector<Rational> values;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Modularity check via the modular law on triples; a violation is reported
// as the concrete N5 pentuple it induces (Birkhoff's criterion).
ValidationReport verify_modular(const ExplicitLattice& lat, std::size_t budget = std::size_t{1} << 16);

// Checks phi(S,e) ⪯ phi(T,e) for every comparable pair S ⪯ T and element e.
ValidationReport verify_phi_order_preserving(const ExplicitLattice& lat);

// Materializes any enumerable lattice for the exhaustive validators.
ExplicitLattice materialize(const Lattice& lat, std::size_t budget = 4096);

}  // namespace pdcover

#endif  // PDCOVER_LATTICE_HPP_
