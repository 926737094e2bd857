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

#include <cstdint>
#include <vector>

#include "noneven/element_set.hpp"
#include "noneven/execution.hpp"
#include "noneven/oriented_matroid.hpp"

namespace noneven {

// The 10-element regular matroid that is neither graphic nor cographic, in
// its standard 5 x 10 representation [I | B].
OrientedMatroid r10_reference();

// Negates the columns in s.
OrientedMatroid reorient(const OrientedMatroid& m, ElementSet s);

inline constexpr int kForbiddenSearchElementBound = 12;

// Some GB-minor is isomorphic to M*(K_{m,n}) oriented one way, with
// 2 <= m < n, m + n odd and mn <= |E|. Throws BoundExceeded above 12
// elements.
bool has_forbidden_cographic_gbminor(const OrientedMatroid& m);

struct R10Report {
  int orientations_checked = 0;
  int noneven_count = 0;
  int forbidden_free_count = 0;
  // Flip sets of orientations that are forbidden-free but even.
  std::vector<ElementSet> counterexamples;
  // Flip sets of orientations that are non-even yet contain a forbidden
  // GB-minor (the converse direction).
  std::vector<ElementSet> converse_violations;
};

// Sweeps all 1024 column sign flips of the reference representation.
R10Report verify_conjecture_on_r10(Execution exec = Execution::kParallel);

// Outcome for one orientation (bit i of `flips` negates element i).
struct R10Orientation {
  std::uint32_t flips = 0;
  bool non_even = false;
  bool forbidden_free = false;
};
R10Orientation classify_r10_orientation(std::uint32_t flips);

}  // namespace noneven
