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

#include "pdcover/lattice.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <queue>
#include <set>

namespace pdcover {

namespace {

std::vector<ElementId> sorted_unique(std::vector<ElementId> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<ElementId> set_union(const std::vector<ElementId>& a, const std::vector<ElementId>& b) {
  std::vector<ElementId> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<ElementId> set_intersection(const std::vector<ElementId>& a,
                                        const std::vector<ElementId>& b) {
  std::vector<ElementId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool is_subset(const std::vector<ElementId>& a, const std::vector<ElementId>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

LatticeElement::LatticeElement(std::vector<ElementId> support, long handle)
    : support_(sorted_unique(std::move(support))), handle_(handle) {}

bool LatticeElement::contains(ElementId e) const {
  return std::binary_search(support_.begin(), support_.end(), e);
}

bool LatticeElement::operator==(const LatticeElement& o) const {
  if (handle_ >= 0 && o.handle_ >= 0) return handle_ == o.handle_;
  return support_ == o.support_;
}

bool LatticeElement::operator<(const LatticeElement& o) const {
  if (support_ != o.support_) return support_ < o.support_;
  return handle_ < o.handle_;
}

// ---------------------------------------------------------------------------
// BooleanLattice

BooleanLattice::BooleanLattice(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("BooleanLattice: negative ground size");
}

LatticeElement BooleanLattice::top() const {
  std::vector<ElementId> all(n_);
  for (int i = 0; i < n_; ++i) all[i] = i;
  return LatticeElement(std::move(all));
}

LatticeElement BooleanLattice::join(const LatticeElement& a, const LatticeElement& b) const {
  return LatticeElement(set_union(a.support(), b.support()));
}

LatticeElement BooleanLattice::meet(const LatticeElement& a, const LatticeElement& b) const {
  return LatticeElement(set_intersection(a.support(), b.support()));
}

LatticeElement BooleanLattice::phi(const LatticeElement& s, ElementId e) const {
  if (!s.contains(e)) return s;
  std::vector<ElementId> out;
  out.reserve(s.support().size() - 1);
  for (ElementId f : s.support())
    if (f != e) out.push_back(f);
  return LatticeElement(std::move(out));
}

bool BooleanLattice::leq(const LatticeElement& a, const LatticeElement& b) const {
  return is_subset(a.support(), b.support());
}

std::optional<std::vector<LatticeElement>> BooleanLattice::enumerate(std::size_t budget) const {
  if (n_ >= 63 || (std::size_t{1} << n_) > budget) return std::nullopt;
  std::vector<LatticeElement> out;
  out.reserve(std::size_t{1} << n_);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n_); ++mask) {
    std::vector<ElementId> s;
    for (int i = 0; i < n_; ++i)
      if (mask >> i & 1) s.push_back(i);
    out.emplace_back(std::move(s));
  }
  return out;
}

// ---------------------------------------------------------------------------
// IdealLattice

IdealLattice::IdealLattice(int n, const std::vector<std::pair<ElementId, ElementId>>& arcs)
    : n_(n), ancestors_(n), descendants_(n) {
  std::vector<std::vector<ElementId>> preds(n);
  std::vector<int> indeg(n, 0);
  for (auto [a, b] : arcs) {
    if (a < 0 || a >= n || b < 0 || b >= n || a == b)
      throw std::invalid_argument("IdealLattice: bad arc");
    preds[b].push_back(a);
  }
  // Transitive closure over a topological order; rejects cycles.
  std::vector<std::vector<ElementId>> succs(n);
  for (int b = 0; b < n; ++b)
    for (ElementId a : preds[b]) succs[a].push_back(b), ++indeg[b];
  std::queue<int> q;
  for (int i = 0; i < n; ++i)
    if (indeg[i] == 0) q.push(i);
  std::vector<int> topo;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    topo.push_back(v);
    for (int w : succs[v])
      if (--indeg[w] == 0) q.push(w);
  }
  if (static_cast<int>(topo.size()) != n)
    throw std::invalid_argument("IdealLattice: precedence graph has a cycle");
  for (int v : topo) {
    std::vector<ElementId> anc;
    for (ElementId p : preds[v]) {
      anc.push_back(p);
      anc.insert(anc.end(), ancestors_[p].begin(), ancestors_[p].end());
    }
    ancestors_[v] = sorted_unique(std::move(anc));
  }
  for (int v = 0; v < n; ++v)
    for (ElementId a : ancestors_[v]) descendants_[a].push_back(v);
  for (int v = 0; v < n; ++v) descendants_[v] = sorted_unique(std::move(descendants_[v]));
}

bool IdealLattice::is_ideal(const std::vector<ElementId>& set) const {
  for (ElementId e : set)
    for (ElementId a : ancestors_[e])
      if (!std::binary_search(set.begin(), set.end(), a)) return false;
  return true;
}

LatticeElement IdealLattice::top() const {
  std::vector<ElementId> all(n_);
  for (int i = 0; i < n_; ++i) all[i] = i;
  return LatticeElement(std::move(all));
}

LatticeElement IdealLattice::join(const LatticeElement& a, const LatticeElement& b) const {
  return LatticeElement(set_union(a.support(), b.support()));
}

LatticeElement IdealLattice::meet(const LatticeElement& a, const LatticeElement& b) const {
  return LatticeElement(set_intersection(a.support(), b.support()));
}

LatticeElement IdealLattice::phi(const LatticeElement& s, ElementId e) const {
  if (!s.contains(e)) return s;
  // Drop e and its up-set: anything kept whose ancestors include e would
  // force e back into the ideal.
  std::vector<ElementId> out;
  const auto& desc = descendants_[e];
  for (ElementId f : s.support()) {
    if (f == e || std::binary_search(desc.begin(), desc.end(), f)) continue;
    out.push_back(f);
  }
  return LatticeElement(std::move(out));
}

bool IdealLattice::leq(const LatticeElement& a, const LatticeElement& b) const {
  return is_subset(a.support(), b.support());
}

std::optional<std::vector<LatticeElement>> IdealLattice::enumerate(std::size_t budget) const {
  std::set<std::vector<ElementId>> seen;
  std::queue<std::vector<ElementId>> work;
  work.push(std::vector<ElementId>{});
  seen.insert(std::vector<ElementId>{});
  while (!work.empty()) {
    std::vector<ElementId> cur = work.front();
    work.pop();
    for (ElementId e = 0; e < n_; ++e) {
      if (std::binary_search(cur.begin(), cur.end(), e)) continue;
      bool eligible = true;
      for (ElementId a : ancestors_[e])
        if (!std::binary_search(cur.begin(), cur.end(), a)) {
          eligible = false;
          break;
        }
      if (!eligible) continue;
      std::vector<ElementId> next = cur;
      next.insert(std::lower_bound(next.begin(), next.end(), e), e);
      if (seen.insert(next).second) {
        if (seen.size() > budget) return std::nullopt;
        work.push(std::move(next));
      }
    }
  }
  std::vector<LatticeElement> out;
  out.reserve(seen.size());
  for (const auto& s : seen) out.emplace_back(s);
  return out;
}

// ---------------------------------------------------------------------------
// ExplicitLattice

ExplicitLattice::ExplicitLattice(std::vector<std::vector<ElementId>> supports,
                                 const std::vector<std::pair<int, int>>& covers)
    : supports_(std::move(supports)) {
  const int n = static_cast<int>(supports_.size());
  for (auto& s : supports_) s = sorted_unique(std::move(s));
  const std::size_t words = (n + 63) / 64;
  up_.assign(n, std::vector<std::uint64_t>(words, 0));
  for (int i = 0; i < n; ++i) up_[i][i / 64] |= std::uint64_t{1} << (i % 64);
  std::vector<std::vector<int>> above(n);
  for (auto [lo, hi] : covers) {
    if (lo < 0 || lo >= n || hi < 0 || hi >= n || lo == hi)
      throw std::invalid_argument("ExplicitLattice: bad cover pair");
    above[lo].push_back(hi);
  }
  // Reflexive-transitive closure by repeated propagation (covers are few).
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i)
      for (int j : above[i])
        for (std::size_t w = 0; w < words; ++w) {
          std::uint64_t merged = up_[i][w] | up_[j][w];
          if (merged != up_[i][w]) {
            up_[i][w] = merged;
            changed = true;
          }
        }
  }
  // Antisymmetry: i ⪯ j and j ⪯ i for i != j means the covers loop.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (leq_idx(i, j) && leq_idx(j, i))
        throw std::invalid_argument("ExplicitLattice: covering relation contains a cycle");
  finalize();
}

ExplicitLattice::ExplicitLattice(std::vector<std::vector<ElementId>> supports)
    : supports_(std::move(supports)) {
  const int n = static_cast<int>(supports_.size());
  for (auto& s : supports_) s = sorted_unique(std::move(s));
  const std::size_t words = (n + 63) / 64;
  up_.assign(n, std::vector<std::uint64_t>(words, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i == j || (is_subset(supports_[i], supports_[j]) && supports_[i] != supports_[j]))
        up_[i][j / 64] |= std::uint64_t{1} << (j % 64);
  finalize();
}

void ExplicitLattice::finalize() {
  const int n = static_cast<int>(supports_.size());
  if (n == 0) throw std::invalid_argument("ExplicitLattice: empty");
  ground_size_ = 0;
  for (const auto& s : supports_)
    for (ElementId e : s) ground_size_ = std::max(ground_size_, e + 1);
  std::set<std::vector<ElementId>> distinct(supports_.begin(), supports_.end());
  duplicate_supports_ = distinct.size() != supports_.size();

  std::vector<int> maximal, minimal;
  for (int i = 0; i < n; ++i) {
    bool is_max = true, is_min = true;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      if (leq_idx(i, j)) is_max = false;
      if (leq_idx(j, i)) is_min = false;
    }
    if (is_max) maximal.push_back(i);
    if (is_min) minimal.push_back(i);
  }
  top_ = maximal.front();
  bottom_ = minimal.front();
  if (maximal.size() != 1 || minimal.size() != 1) {
    order_is_lattice_ = false;
    structure_note_ = "order has multiple maximal or minimal elements";
  }
  for (int i = 0; i < n && order_is_lattice_; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (join_idx(i, j) < 0 || meet_idx(i, j) < 0) {
        order_is_lattice_ = false;
        structure_note_ = "pair without a unique join or meet";
        break;
      }
    }
}

bool ExplicitLattice::leq_idx(int i, int j) const {
  return up_[i][j / 64] >> (j % 64) & 1;
}

int ExplicitLattice::index_of(const LatticeElement& el) const {
  if (el.handle() >= 0 && el.handle() < static_cast<long>(supports_.size()))
    return static_cast<int>(el.handle());
  for (int i = 0; i < static_cast<int>(supports_.size()); ++i)
    if (supports_[i] == el.support()) return i;
  throw std::invalid_argument("ExplicitLattice: element does not belong to this lattice");
}

LatticeElement ExplicitLattice::element(int idx) const {
  return LatticeElement(supports_[idx], idx);
}

int ExplicitLattice::join_idx(int i, int j) const {
  const int n = static_cast<int>(supports_.size());
  // The join is the upper bound below every other upper bound.
  std::vector<int> ub;
  for (int k = 0; k < n; ++k)
    if (leq_idx(i, k) && leq_idx(j, k)) ub.push_back(k);
  if (ub.empty()) return INT_MIN;
  for (int k : ub) {
    bool least = true;
    for (int l : ub)
      if (!leq_idx(k, l)) {
        least = false;
        break;
      }
    if (least) return k;
  }
  // Not a lattice: deterministic fallback, lowest-index minimal upper bound.
  for (int k : ub) {
    bool minimal = true;
    for (int l : ub)
      if (l != k && leq_idx(l, k)) {
        minimal = false;
        break;
      }
    if (minimal) return ~k;  // flag ambiguity in the sign bit
  }
  return INT_MIN;
}

int ExplicitLattice::meet_idx(int i, int j) const {
  const int n = static_cast<int>(supports_.size());
  std::vector<int> lb;
  for (int k = 0; k < n; ++k)
    if (leq_idx(k, i) && leq_idx(k, j)) lb.push_back(k);
  if (lb.empty()) return INT_MIN;
  for (int k : lb) {
    bool greatest = true;
    for (int l : lb)
      if (!leq_idx(l, k)) {
        greatest = false;
        break;
      }
    if (greatest) return k;
  }
  for (int k : lb) {
    bool maximal = true;
    for (int l : lb)
      if (l != k && leq_idx(k, l)) {
        maximal = false;
        break;
      }
    if (maximal) return ~k;
  }
  return -1;
}

int ExplicitLattice::phi_idx(int s, ElementId e) const {
  const int n = static_cast<int>(supports_.size());
  std::vector<int> cand;
  for (int k = 0; k < n; ++k) {
    if (!leq_idx(k, s)) continue;
    const auto& sup = supports_[k];
    if (!std::binary_search(sup.begin(), sup.end(), e)) cand.push_back(k);
  }
  if (cand.empty()) return INT_MIN;
  for (int k : cand) {
    bool greatest = true;
    for (int l : cand)
      if (!leq_idx(l, k)) {
        greatest = false;
        break;
      }
    if (greatest) return k;
  }
  for (int k : cand) {
    bool maximal = true;
    for (int l : cand)
      if (l != k && leq_idx(k, l)) {
        maximal = false;
        break;
      }
    if (maximal) return ~k;
  }
  return INT_MIN;
}

LatticeElement ExplicitLattice::join(const LatticeElement& a, const LatticeElement& b) const {
  int k = join_idx(index_of(a), index_of(b));
  if (k == INT_MIN) throw StructureError("ExplicitLattice: pair has no upper bound");
  return element(k >= 0 ? k : ~k);
}

LatticeElement ExplicitLattice::meet(const LatticeElement& a, const LatticeElement& b) const {
  int k = meet_idx(index_of(a), index_of(b));
  if (k == INT_MIN) throw StructureError("ExplicitLattice: pair has no lower bound");
  return element(k >= 0 ? k : ~k);
}

LatticeElement ExplicitLattice::phi(const LatticeElement& s, ElementId e) const {
  if (!s.contains(e)) return element(index_of(s));
  int k = phi_idx(index_of(s), e);
  if (k == INT_MIN)
    throw StructureError("ExplicitLattice: no row below avoids the element");
  return element(k >= 0 ? k : ~k);
}

bool ExplicitLattice::leq(const LatticeElement& a, const LatticeElement& b) const {
  return leq_idx(index_of(a), index_of(b));
}

std::optional<std::vector<LatticeElement>> ExplicitLattice::enumerate(std::size_t budget) const {
  if (supports_.size() > budget) return std::nullopt;
  std::vector<LatticeElement> out;
  out.reserve(supports_.size());
  for (int i = 0; i < static_cast<int>(supports_.size()); ++i) out.push_back(element(i));
  return out;
}

// ---------------------------------------------------------------------------
// Validators

ValidationReport verify_modular(const ExplicitLattice& lat, std::size_t budget) {
  ValidationReport report;
  const int n = lat.size();
  if (!lat.order_is_lattice()) {
    Violation v;
    v.property = "P3";
    v.message = "order is not a lattice: " + lat.structure_note();
    report.violations.push_back(std::move(v));
    return report;
  }
  const std::size_t triples = static_cast<std::size_t>(n) * n * n;
  if (triples > budget)
    throw BudgetExceeded("verify_modular: lattice too large for the scan budget");
  // Modular law: i ⪯ k implies i ∨ (j ∧ k) = (i ∨ j) ∧ k. A violating triple
  // induces the pentagon {j∧k, i∨(j∧k), (i∨j)∧k, j, i∨j}.
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (!lat.leq_idx(i, k)) continue;
      for (int j = 0; j < n; ++j) {
        int jk = lat.meet_idx(j, k);
        int ij = lat.join_idx(i, j);
        if (jk < 0 || ij < 0) continue;
        int lhs = lat.join_idx(i, jk);
        int rhs = lat.meet_idx(ij, k);
        if (lhs < 0 || rhs < 0 || lhs == rhs) continue;
        // In a lattice these are all unique; guards above keep the scan
        // total on degenerate input.
        Violation v;
        v.property = "P3";
        v.message = "modular law fails; N5 pentuple reported";
        for (int idx : {jk, lhs, rhs, j, ij}) v.rows.push_back(lat.element(idx).support());
        report.violations.push_back(std::move(v));
        return report;
      }
    }
  return report;
}

ValidationReport verify_phi_order_preserving(const ExplicitLattice& lat) {
  ValidationReport report;
  const int n = lat.size();
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      if (s == t || !lat.leq_idx(s, t)) continue;
      for (ElementId e = 0; e < lat.ground_size(); ++e) {
        int ps = lat.phi_idx(s, e);
        int pt = lat.phi_idx(t, e);
        if (ps == INT_MIN || pt == INT_MIN) continue;
        if (ps < 0) ps = ~ps;
        if (pt < 0) pt = ~pt;
        if (lat.leq_idx(ps, pt)) continue;
        Violation v;
        v.property = "P3";
        v.message = "phi is not order preserving";
        v.element = e;
        v.rows = {lat.element(s).support(), lat.element(t).support(),
                  lat.element(ps).support(), lat.element(pt).support()};
        report.violations.push_back(std::move(v));
        return report;
      }
    }
  return report;
}

ExplicitLattice materialize(const Lattice& lat, std::size_t budget) {
  auto all = lat.enumerate(budget);
  if (!all) throw BudgetExceeded("materialize: lattice exceeds enumeration budget");
  std::vector<std::vector<ElementId>> supports;
  supports.reserve(all->size());
  for (const auto& el : *all) supports.push_back(el.support());
  // Order inherited from the source lattice, expressed through covers.
  const int n = static_cast<int>(all->size());
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !lat.leq((*all)[i], (*all)[j])) continue;
      bool is_cover = true;
      for (int k = 0; k < n && is_cover; ++k) {
        if (k == i || k == j) continue;
        if (lat.leq((*all)[i], (*all)[k]) && lat.leq((*all)[k], (*all)[j])) is_cover = false;
      }
      if (is_cover) covers.emplace_back(i, j);
    }
  return ExplicitLattice(std::move(supports), covers);
}

}  // namespace pdcover
