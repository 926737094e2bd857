// Copyright 2026 The Authors.
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

#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "noneven/element_set.hpp"
#include "noneven/exact_linalg.hpp"

namespace noneven {

// Largest ground set accepted by the exhaustive circuit enumeration.
inline constexpr int kDefaultEnumerationBound = 16;

// Oriented regular matroid M[A] over a labelled ground set; element i is
// column i of the representing TU matrix. Immutable; derived data (rank,
// dual, enumerated circuits) is computed once on first use and shared between
// copies.
class OrientedMatroid {
 public:
  OrientedMatroid();
  // Labels default to e1..en. The representation is trusted to be TU; use
  // `checked` to verify it first.
  explicit OrientedMatroid(TUMatrix rep);
  OrientedMatroid(TUMatrix rep, std::vector<std::string> labels);

  // Runs check_tu up to `tu_order` and throws NotTotallyUnimodular if refuted.
  static OrientedMatroid checked(TUMatrix rep, std::vector<std::string> labels,
                                 int tu_order = kDefaultTuOrder);

  int size() const { return rep_.cols(); }
  ElementSet ground() const { return ElementSet::range(size()); }
  const TUMatrix& rep() const { return rep_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int e) const { return labels_.at(e); }
  // Position of the element with this label, or -1.
  int find(const std::string& label) const;
  std::vector<std::string> labels_of(ElementSet s) const;

  int rank() const;
  int rank_of(ElementSet s) const { return rank_of_columns(rep_, s); }
  bool is_loop(int e) const { return rep_.column_is_zero(e); }

  // Representation by kernel_basis(rep); cached.
  const OrientedMatroid& dual() const;

  // All signed circuits, one canonical representative each (least element
  // positive), ordered by support size then lexicographically. Throws
  // BoundExceeded when size() > bound.
  const std::vector<SignedSet>& circuits(int bound = kDefaultEnumerationBound) const;
  const std::vector<SignedSet>& cocircuits(int bound = kDefaultEnumerationBound) const;

 private:
  struct Cache;
  TUMatrix rep_;
  std::vector<std::string> labels_;
  std::shared_ptr<Cache> cache_;
};

// Brute-force signed-circuit enumeration of M[A]: candidate supports by
// increasing size, minimal dependence decided by exact rank.
std::vector<SignedSet> enumerate_circuits(const TUMatrix& rep);

// A minor together with the host position of each of its elements.
struct Minor {
  OrientedMatroid matroid;
  std::vector<int> host_elements;

  ElementSet lift(ElementSet s) const;
  SignedSet lift(const SignedSet& s) const;
};

inline const std::vector<SignedSet>& circuits(
    const OrientedMatroid& m, int bound = kDefaultEnumerationBound) {
  return m.circuits(bound);
}
inline const std::vector<SignedSet>& cocircuits(
    const OrientedMatroid& m, int bound = kDefaultEnumerationBound) {
  return m.cocircuits(bound);
}
inline const OrientedMatroid& dual(const OrientedMatroid& m) { return m.dual(); }

Minor delete_elements(const OrientedMatroid& m, ElementSet z);
// Elements are contracted in increasing order; each non-zero column is
// pivoted to the first unit vector and its row dropped, zero columns (loops)
// are deleted.
Minor contract(const OrientedMatroid& m, ElementSet z);
// M - deleted / contracted.
Minor minor(const OrientedMatroid& m, ElementSet deleted, ElementSet contracted);

// A signed cocircuit (S - {e}, {e}) if one exists.
std::optional<SignedSet> is_butterfly_contractible(
    const OrientedMatroid& m, int e, int bound = kDefaultEnumerationBound);

// A GB-minor: M - deleted / contracted, reachable through a sequence of
// deletions and butterfly contractions.
struct GbMinor {
  Minor minor;
  ElementSet deleted;
  ElementSet contracted;
};

// All GB-minors with at least `min_size` elements, deduplicated by labelled
// signed-circuit family; M itself comes first.
std::vector<GbMinor> gb_minors(const OrientedMatroid& m, int min_size,
                               int bound = kDefaultEnumerationBound);

// Isomorphism of signed circuit families.
bool is_isomorphic(const OrientedMatroid& a, const OrientedMatroid& b,
                   int bound = kDefaultEnumerationBound);

}  // namespace noneven
