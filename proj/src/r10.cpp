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

#include "noneven/r10.hpp"

#include <algorithm>
#include <string>

#include "noneven/digraph.hpp"
#include "noneven/errors.hpp"
#include "noneven/evenness.hpp"
#include "noneven/gb_search.hpp"
#include "noneven/signed_family.hpp"

namespace noneven {

namespace {

struct Target {
  int size;
  std::vector<SignedSet> circuits;
};

const std::vector<Target>& forbidden_targets() {
  static const std::vector<Target> targets = [] {
    std::vector<Target> out;
    for (int a = 2; a * (a + 1) <= kForbiddenSearchElementBound; ++a) {
      for (int b = a + 1; a * b <= kForbiddenSearchElementBound; b += 2) {
        const OrientedMatroid t = bond_matroid(build_one_direction(a, b));
        out.push_back({t.size(), t.circuits()});
      }
    }
    return out;
  }();
  return targets;
}

}  // namespace

OrientedMatroid r10_reference() {
  return OrientedMatroid(TUMatrix::from_rows({
      {1, 0, 0, 0, 0, -1, 1, 0, 0, 1},
      {0, 1, 0, 0, 0, 1, -1, 1, 0, 0},
      {0, 0, 1, 0, 0, 0, 1, -1, 1, 0},
      {0, 0, 0, 1, 0, 0, 0, 1, -1, 1},
      {0, 0, 0, 0, 1, 1, 0, 0, 1, -1},
  }));
}

OrientedMatroid reorient(const OrientedMatroid& m, ElementSet s) {
  if (!s.is_subset_of(m.ground())) {
    throw PreconditionError("reorientation set is not within the ground set");
  }
  return OrientedMatroid(m.rep().negate_columns(s), m.labels());
}

bool has_forbidden_cographic_gbminor(const OrientedMatroid& m) {
  if (m.size() > kForbiddenSearchElementBound) {
    throw BoundExceeded("forbidden minor search limited to " +
                        std::to_string(kForbiddenSearchElementBound) + " elements");
  }
  std::vector<const Target*> targets;
  int min_size = m.size() + 1;
  for (const Target& t : forbidden_targets()) {
    if (t.size <= m.size()) {
      targets.push_back(&t);
      min_size = std::min(min_size, t.size);
    }
  }
  if (targets.empty()) return false;
  const GbMinorSearch search(m.size(), m.circuits(), m.cocircuits());
  bool found = false;
  search.explore(min_size, [&](const GbState& s) {
    const ElementSet ground = m.ground() - s.removed();
    for (const Target* t : targets) {
      if (t->size != ground.size()) continue;
      const auto circuits = search.circuits_of(s);
      if (circuits.size() != t->circuits.size()) continue;
      if (families_isomorphic(t->size, compact_family(circuits, ground), t->size,
                              t->circuits)) {
        found = true;
        return false;
      }
    }
    return true;
  });
  return found;
}

R10Orientation classify_r10_orientation(std::uint32_t flips) {
  static const OrientedMatroid reference = r10_reference();
  const OrientedMatroid m = reorient(reference, ElementSet(flips));
  R10Orientation out;
  out.flips = flips;
  out.non_even = non_even_bruteforce(m).has_value();
  out.forbidden_free = !has_forbidden_cographic_gbminor(m);
  return out;
}

R10Report verify_conjecture_on_r10(Execution exec) {
  constexpr int kOrientations = 1 << 10;
  // Prime the shared statics before any worker touches them.
  forbidden_targets();
  classify_r10_orientation(0);
  std::vector<R10Orientation> results(kOrientations);
  if (exec == Execution::kSerial) {
    for (int s = 0; s < kOrientations; ++s) {
      results[s] = classify_r10_orientation(std::uint32_t(s));
    }
  } else {
#pragma omp parallel for schedule(dynamic, 8)
    for (int s = 0; s < kOrientations; ++s) {
      results[s] = classify_r10_orientation(std::uint32_t(s));
    }
  }
  R10Report report;
  for (const R10Orientation& r : results) {
    ++report.orientations_checked;
    if (r.non_even) ++report.noneven_count;
    if (r.forbidden_free) ++report.forbidden_free_count;
    if (r.forbidden_free && !r.non_even) {
      report.counterexamples.push_back(ElementSet(r.flips));
    }
    if (r.non_even && !r.forbidden_free) {
      report.converse_violations.push_back(ElementSet(r.flips));
    }
  }
  return report;
}

}  // namespace noneven
