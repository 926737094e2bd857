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

#include "noneven/evenness.hpp"

#include <algorithm>
#include <string>

#include "noneven/errors.hpp"
#include "noneven/farkas.hpp"

namespace noneven {

namespace {

bool column_sum_is_zero(const TUMatrix& rep, ElementSet c) {
  for (int r = 0; r < rep.rows(); ++r) {
    int sum = 0;
    c.for_each([&](int e) { sum += rep.at(r, e); });
    if (sum != 0) return false;
  }
  return true;
}

BasisAndCover basis_and_cover_rec(const OrientedMatroid& cur) {
  BasisAndCover out;
  const int n = cur.size();
  if (n == 0) return out;
  if (n == 1) {
    // Totally cyclic on one element: a loop.
    out.basis.circuits.push_back(ElementSet{0});
    out.cover.elements = ElementSet{0};
    return out;
  }
  const int e = 0;
  const ElementSet c_e = directed_circuit_through(cur, e);
  const Minor without = delete_elements(cur, ElementSet{e});
  if (is_totally_cyclic(without.matroid)) {
    const BasisAndCover sub = basis_and_cover_rec(without.matroid);
    for (ElementSet c : sub.basis.circuits) {
      out.basis.circuits.push_back(without.lift(c));
    }
    out.basis.circuits.push_back(c_e);
    out.cover.elements = without.lift(sub.cover.elements);
    if ((out.cover.elements & c_e).size() % 2 == 0) out.cover.elements.insert(e);
    return out;
  }
  const Minor contracted = contract(cur, ElementSet{e});
  const BasisAndCover sub = basis_and_cover_rec(contracted.matroid);
  for (ElementSet c : sub.basis.circuits) {
    ElementSet lifted = contracted.lift(c);
    if (!column_sum_is_zero(cur.rep(), lifted)) lifted.insert(e);
    out.basis.circuits.push_back(lifted);
  }
  out.cover.elements = contracted.lift(sub.cover.elements);
  return out;
}

}  // namespace

BasisAndCover directed_basis_and_cover(const OrientedMatroid& m) {
  if (!is_totally_cyclic(m)) {
    throw PreconditionError("directed basis requires a totally cyclic host");
  }
  return basis_and_cover_rec(m);
}

bool is_coindependent(const OrientedMatroid& m, ElementSet a) {
  return m.rank_of(m.ground() - a) == m.rank();
}

DirectedCircuitBasis basis_with_marked_set(const OrientedMatroid& m,
                                           ElementSet a) {
  if (!a.is_subset_of(m.ground())) {
    throw PreconditionError("marked set is not within the ground set");
  }
  if (!is_coindependent(m, a)) {
    throw PreconditionError("marked set is not coindependent");
  }
  const Minor rest = delete_elements(m, a);
  if (!is_totally_cyclic(rest.matroid)) {
    throw PreconditionError("host minus the marked set is not totally cyclic");
  }
  DirectedCircuitBasis out;
  for (ElementSet c : basis_and_cover_rec(rest.matroid).basis.circuits) {
    out.circuits.push_back(rest.lift(c));
  }
  a.for_each([&](int x) {
    const Minor mx = delete_elements(m, a - ElementSet{x});
    const int local = int(std::find(mx.host_elements.begin(),
                                    mx.host_elements.end(), x) -
                          mx.host_elements.begin());
    out.circuits.push_back(mx.lift(directed_circuit_through(mx.matroid, local)));
  });
  return out;
}

std::vector<ElementSet> directed_circuits(const OrientedMatroid& m, int bound) {
  std::vector<ElementSet> out;
  for (const auto& x : m.circuits(bound)) {
    if (x.is_directed()) out.push_back(x.support());
  }
  return out;
}

std::optional<ParityCover> non_even_bruteforce(const OrientedMatroid& m,
                                               int bound) {
  GF2Matrix a(m.size());
  for (ElementSet c : directed_circuits(m, bound)) a.add_row(c);
  GF2Vector ones(a.rows.size());
  ones.set();
  const auto x = gf2_solve(a, ones);
  if (!x) return std::nullopt;
  return ParityCover{from_gf2(*x)};
}

std::optional<ElementSet> even_directed_circuit_bruteforce(
    const OrientedMatroid& m, int bound) {
  for (ElementSet c : directed_circuits(m, bound)) {
    if (c.size() % 2 == 0) return c;
  }
  return std::nullopt;
}

EquivalenceReport equivalence_suite(const OrientedMatroid& m, int bound) {
  EquivalenceReport report;
  const std::vector<ElementSet> dirs = directed_circuits(m, bound);
  report.basis = directed_basis_and_cover(m);
  report.non_even = non_even_bruteforce(m, bound).has_value();

  GF2Matrix family(m.size());
  for (ElementSet c : dirs) family.add_row(c);
  const auto kernel = gf2_left_kernel(family);
  report.no_odd_empty_sum = std::none_of(
      kernel.begin(), kernel.end(), [](const GF2Vector& y) { return y.count() % 2 == 1; });

  const auto& basis = report.basis.basis.circuits;
  GF2Matrix expand(int(basis.size()));
  for (int e = 0; e < m.size(); ++e) {
    GF2Vector row(basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (basis[j].contains(e)) row.set(j);
    }
    expand.add_row(std::move(row));
  }
  report.odd_basis_expansions = true;
  for (ElementSet c : dirs) {
    const auto y = gf2_solve(expand, to_gf2(c, m.size()));
    if (!y) throw InvariantViolation("directed circuit outside the basis span");
    if (y->count() % 2 == 0) report.odd_basis_expansions = false;
  }

  const ElementSet j = report.basis.cover.elements;
  report.cover_odd_on_all = std::all_of(dirs.begin(), dirs.end(), [&](ElementSet c) {
    return (c & j).size() % 2 == 1;
  });
  return report;
}

std::optional<ElementSet> find_odd_directed_circuit(const OrientedMatroid& m) {
  const Minor tc = totally_cyclic_part(m);
  if (tc.matroid.size() == 0) return std::nullopt;
  for (ElementSet c : directed_basis_and_cover(tc.matroid).basis.circuits) {
    if (c.size() % 2 == 1) return tc.lift(c);
  }
  // All basis members even, so is every circuit of TC(M).
  return std::nullopt;
}

bool detect_even_circuit_via_noneven_oracle(const OrientedMatroid& m,
                                            const MatroidOracle& is_non_even) {
  const Minor tc = totally_cyclic_part(m);
  if (tc.matroid.size() == 0) return false;
  const BasisAndCover bc = directed_basis_and_cover(tc.matroid);
  for (ElementSet c : bc.basis.circuits) {
    if (c.size() % 2 == 0) return true;
  }
  // Every basis member is odd, so J = E(TC) is a parity cover and TC(M) has
  // no even directed circuit exactly when it is non-even.
  return !is_non_even(tc.matroid);
}

bool decide_noneven_via_even_oracle(const OrientedMatroid& m,
                                    const MatroidOracle& has_even_circuit) {
  const Minor tc = totally_cyclic_part(m);
  if (tc.matroid.size() == 0) return true;
  const BasisAndCover bc = directed_basis_and_cover(tc.matroid);
  const Minor doubled =
      series_duplicate(tc.matroid, tc.matroid.ground() - bc.cover.elements);
  return !has_even_circuit(doubled.matroid);
}

Minor series_duplicate(const OrientedMatroid& m, ElementSet z, int tu_order) {
  if (!z.is_subset_of(m.ground())) {
    throw PreconditionError("duplicated set is not within the ground set");
  }
  const int r = m.rep().rows();
  const int n = m.size();
  const std::vector<int> dup = z.to_vector();
  const int k = int(dup.size());
  if (n + k > kMaxElements) throw BoundExceeded("too many elements after duplication");
  TUMatrix a(r + k, n + k);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < n; ++j) a.set(i, j, m.rep().at(i, j));
  }
  std::vector<std::string> labels = m.labels();
  std::vector<int> host(n);
  for (int j = 0; j < n; ++j) host[j] = j;
  for (int i = 0; i < k; ++i) {
    // x_copy = x_e on the kernel.
    a.set(r + i, dup[i], 1);
    a.set(r + i, n + i, -1);
    std::string label = m.label(dup[i]) + "'";
    while (std::find(labels.begin(), labels.end(), label) != labels.end()) {
      label += "'";
    }
    labels.push_back(label);
    host.push_back(dup[i]);
  }
  if (check_tu(a.to_int(), tu_order).refuted()) {
    throw InvariantViolation("series extension is not totally unimodular");
  }
  return Minor{OrientedMatroid(std::move(a), std::move(labels)), std::move(host)};
}

}  // namespace noneven
