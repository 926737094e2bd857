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

#include "noneven/farkas.hpp"

#include <string>

#include "noneven/errors.hpp"

namespace noneven {

namespace {

bool in_directed_circuit_within(const TUMatrix& rep, ElementSet z, int e) {
  if (rep.column_is_zero(e)) return true;
  std::vector<std::vector<int>> cols;
  (z - ElementSet{e}).for_each([&](int f) { cols.push_back(rep.column(f)); });
  std::vector<int> target = rep.column(e);
  for (int& v : target) v = -v;
  return conical_feasibility(cols, target).has_value();
}

void check_element(const OrientedMatroid& m, int e) {
  if (e < 0 || e >= m.size()) {
    throw PreconditionError("element " + std::to_string(e) + " out of range");
  }
}

}  // namespace

bool in_directed_circuit(const OrientedMatroid& m, int e) {
  check_element(m, e);
  return in_directed_circuit_within(m.rep(), m.ground(), e);
}

bool is_directed_circuit(const OrientedMatroid& m, ElementSet z) {
  if (z.empty() || !z.is_subset_of(m.ground())) return false;
  const int k = z.size();
  if (m.rank_of(z) != k - 1) return false;
  bool minimal = true;
  z.for_each([&](int x) {
    if (m.rank_of(z - ElementSet{x}) != k - 1) minimal = false;
  });
  if (!minimal) return false;
  const TUMatrix kernel = kernel_basis(m.rep().select_columns(z));
  if (kernel.rows() != 1) return false;
  for (int j = 0; j < k; ++j) {
    if (kernel.at(0, j) <= 0) return false;
  }
  return true;
}

bool is_directed_cocircuit(const OrientedMatroid& m, ElementSet z) {
  return is_directed_circuit(m.dual(), z);
}

ElementSet directed_circuit_through(const OrientedMatroid& m, int e) {
  check_element(m, e);
  const TUMatrix& rep = m.rep();
  ElementSet z = m.ground();
  if (!in_directed_circuit_within(rep, z, e)) {
    throw PreconditionError("element " + m.label(e) +
                            " lies on no directed circuit");
  }
  // A single increasing scan gives the same Z as restarting after every
  // removal: once M[Z] - f has no directed circuit through e, neither has any
  // smaller M[Z'] - f.
  (m.ground() - ElementSet{e}).for_each([&](int f) {
    const ElementSet smaller = z - ElementSet{f};
    if (in_directed_circuit_within(rep, smaller, e)) z = smaller;
  });
  if (!z.contains(e) || !is_directed_circuit(m, z)) {
    throw InvariantViolation("greedy shrinking did not end on a directed circuit");
  }
  return z;
}

FarkasCertificate farkas_dichotomy(const OrientedMatroid& m, int e) {
  check_element(m, e);
  if (in_directed_circuit(m, e)) {
    return {FarkasCertificate::Kind::kDirectedCircuit, e,
            directed_circuit_through(m, e)};
  }
  return {FarkasCertificate::Kind::kDirectedCocircuit, e,
          directed_circuit_through(m.dual(), e)};
}

Minor totally_cyclic_part(const OrientedMatroid& m) {
  ElementSet drop;
  for (int e = 0; e < m.size(); ++e) {
    if (!in_directed_circuit(m, e)) drop.insert(e);
  }
  return delete_elements(m, drop);
}

bool is_totally_cyclic(const OrientedMatroid& m) {
  for (int e = 0; e < m.size(); ++e) {
    if (!in_directed_circuit(m, e)) return false;
  }
  return true;
}

}  // namespace noneven
