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

#include "noneven/element_set.hpp"
#include "noneven/oriented_matroid.hpp"

namespace noneven {

// Either a directed circuit or a directed cocircuit through `element`.
struct FarkasCertificate {
  enum class Kind { kDirectedCircuit, kDirectedCocircuit };
  Kind kind;
  int element;
  ElementSet set;

  bool is_circuit() const { return kind == Kind::kDirectedCircuit; }
};

// -x_e lies in the cone of the other columns (a loop always qualifies).
bool in_directed_circuit(const OrientedMatroid& m, int e);

// Greedy shrinking of Z = E: each f != e, in increasing order, is dropped
// when M[Z] - f still has a directed circuit through e. Throws
// PreconditionError when e lies on no directed circuit, InvariantViolation
// if the result fails the minimal-dependence / directedness re-check.
ElementSet directed_circuit_through(const OrientedMatroid& m, int e);

FarkasCertificate farkas_dichotomy(const OrientedMatroid& m, int e);

// Largest totally cyclic deletion minor.
Minor totally_cyclic_part(const OrientedMatroid& m);
bool is_totally_cyclic(const OrientedMatroid& m);

// Rank/kernel re-checks used to validate certificates.
bool is_directed_circuit(const OrientedMatroid& m, ElementSet z);
bool is_directed_cocircuit(const OrientedMatroid& m, ElementSet z);

}  // namespace noneven
