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

#include <vector>

#include "noneven/element_set.hpp"

namespace noneven {

// Set-level helpers on families of signed sets (signed circuits or signed
// cocircuits). Families are stored one representative per {X, -X}.

// Canonical representatives, sorted, duplicates removed.
std::vector<SignedSet> canonical_family(std::vector<SignedSet> family);

// Signed circuits of M - deleted / contracted, computed from the signed
// circuits of M: the minimal non-empty restrictions to E - contracted of the
// circuits avoiding `deleted`. With the roles of the two sets swapped, the
// same call turns signed cocircuits of M into those of the minor.
std::vector<SignedSet> minor_family(const std::vector<SignedSet>& host,
                                    ElementSet deleted, ElementSet contracted);

// Renumbers the members of `ground` to 0..|ground|-1 (in increasing order).
std::vector<SignedSet> compact_family(const std::vector<SignedSet>& family,
                                      ElementSet ground);

// True iff some bijection {0..n1-1} -> {0..n2-1} maps family `a` onto `b`,
// each signed set taken up to global sign.
bool families_isomorphic(int n1, const std::vector<SignedSet>& a, int n2,
                         const std::vector<SignedSet>& b);

// |X+ n Y+| + |X- n Y-| == |X+ n Y-| + |X- n Y+|.
inline bool strongly_orthogonal(const SignedSet& x, const SignedSet& y) {
  return (x.positive & y.positive).size() + (x.negative & y.negative).size() ==
         (x.positive & y.negative).size() + (x.negative & y.positive).size();
}

}  // namespace noneven
