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
#include <optional>
#include <vector>

#include "noneven/element_set.hpp"
#include "noneven/oriented_matroid.hpp"

namespace noneven {

// A circuit basis of the underlying matroid made of directed circuits.
struct DirectedCircuitBasis {
  std::vector<ElementSet> circuits;
};

// Set J meeting every basis circuit it was built for an odd number of times.
struct ParityCover {
  ElementSet elements;
};

struct BasisAndCover {
  DirectedCircuitBasis basis;
  ParityCover cover;
};

// Recursive construction on a totally cyclic host: take the least element e
// and a directed circuit C_e through it; recurse on M - e when that stays
// totally cyclic (adding C_e and fixing the parity of J with e), otherwise on
// M / e, lifting each circuit C to C or C + e by testing A 1_C = 0.
BasisAndCover directed_basis_and_cover(const OrientedMatroid& m);

// rank(E - a) == rank(E).
bool is_coindependent(const OrientedMatroid& m, ElementSet a);

// Directed circuit basis in which every element of `a` lies in exactly one
// member. Requires a coindependent and M - a totally cyclic.
DirectedCircuitBasis basis_with_marked_set(const OrientedMatroid& m, ElementSet a);

// Directed circuits by enumeration, in enumeration order.
std::vector<ElementSet> directed_circuits(const OrientedMatroid& m,
                                          int bound = kDefaultEnumerationBound);

// J with |C n J| odd for every directed circuit C, or nullopt if M is even.
std::optional<ParityCover> non_even_bruteforce(
    const OrientedMatroid& m, int bound = kDefaultEnumerationBound);

// Some even directed circuit, by enumeration.
std::optional<ElementSet> even_directed_circuit_bruteforce(
    const OrientedMatroid& m, int bound = kDefaultEnumerationBound);

// Evaluation of the four equivalent non-evenness conditions on a totally
// cyclic host.
struct EquivalenceReport {
  bool non_even = false;               // a J exists (brute force)
  bool no_odd_empty_sum = false;       // no odd family of directed circuits sums to 0
  bool odd_basis_expansions = false;   // every directed circuit = odd sum of basis
  bool cover_odd_on_all = false;       // basis cover J is odd on every directed circuit
  BasisAndCover basis;

  bool consistent() const {
    return non_even == no_odd_empty_sum && non_even == odd_basis_expansions &&
           non_even == cover_odd_on_all;
  }
};

EquivalenceReport equivalence_suite(const OrientedMatroid& m,
                                    int bound = kDefaultEnumerationBound);

// First odd member of a directed basis of TC(M), in host positions.
std::optional<ElementSet> find_odd_directed_circuit(const OrientedMatroid& m);

using MatroidOracle = std::function<bool(const OrientedMatroid&)>;

// Decides "has an even directed circuit" from a non-evenness oracle.
bool detect_even_circuit_via_noneven_oracle(const OrientedMatroid& m,
                                            const MatroidOracle& is_non_even);

// Decides non-evenness from an even-directed-circuit oracle.
bool decide_noneven_via_even_oracle(const OrientedMatroid& m,
                                    const MatroidOracle& has_even_circuit);

// Series extension: every element of z gets a copy lying on exactly the same
// signed circuits with the same sign. Copies are appended after the original
// elements in increasing order of z and labelled with a trailing "'".
// host_elements maps each copy to its original. The bordered representation
// is re-checked for total unimodularity up to `tu_order`.
inline constexpr int kSeriesRecheckOrder = 3;
Minor series_duplicate(const OrientedMatroid& m, ElementSet z,
                       int tu_order = kSeriesRecheckOrder);

}  // namespace noneven
