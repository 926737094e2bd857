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
#include <vector>

#include "noneven/element_set.hpp"

namespace noneven {

// One node of the GB-minor search: M - deleted / contracted.
struct GbState {
  ElementSet deleted;
  ElementSet contracted;

  ElementSet removed() const { return deleted | contracted; }
  friend bool operator==(const GbState&, const GbState&) = default;
};

// Exhaustive GB-minor exploration driven entirely by the host's signed
// circuits and cocircuits, so no matrix work happens per state.
//
// Butterfly-contractibility of e in N = M - D / C is decided on the host's
// cocircuits: some signed cocircuit Y of M avoids C, contains e, and has e as
// the only member of its side once D is removed. Restrictions of such Y are
// covectors of N, and conformal decomposition of a covector yields a signed
// cocircuit of N with the same property, so the test is exact.
class GbMinorSearch {
 public:
  GbMinorSearch(int size, std::vector<SignedSet> circuits,
                std::vector<SignedSet> cocircuits);

  int size() const { return size_; }
  const std::vector<SignedSet>& host_circuits() const { return circuits_; }
  const std::vector<SignedSet>& host_cocircuits() const { return cocircuits_; }

  bool butterfly_contractible(const GbState& s, int e) const;
  // Signed circuits / cocircuits of the minor, in host element positions.
  std::vector<SignedSet> circuits_of(const GbState& s) const;
  std::vector<SignedSet> cocircuits_of(const GbState& s) const;

  // Visits every reachable state with at least `min_size` remaining elements
  // exactly once, the host first, then by increasing number of removed
  // elements. Stops early when `visit` returns false; returns false in that
  // case.
  bool explore(int min_size,
               const std::function<bool(const GbState&)>& visit) const;

 private:
  int size_;
  std::vector<SignedSet> circuits_;
  std::vector<SignedSet> cocircuits_;
};

}  // namespace noneven
