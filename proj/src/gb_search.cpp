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

#include "noneven/gb_search.hpp"

#include <algorithm>
#include <cstdint>

#include "noneven/errors.hpp"
#include "noneven/signed_family.hpp"

namespace noneven {

namespace {

// States are keyed by (deleted, contracted); the pair determines the minor.
inline std::uint64_t key(const GbState& s) {
  return s.deleted.bits() | (s.contracted.bits() << 32);
}

}  // namespace

GbMinorSearch::GbMinorSearch(int size, std::vector<SignedSet> circuits,
                             std::vector<SignedSet> cocircuits)
    : size_(size),
      circuits_(std::move(circuits)),
      cocircuits_(std::move(cocircuits)) {
  if (size < 0 || size > 32) {
    throw BoundExceeded("GB-minor search supports at most 32 elements");
  }
}

bool GbMinorSearch::butterfly_contractible(const GbState& s, int e) const {
  for (const auto& y : cocircuits_) {
    const ElementSet support = y.support();
    if (!support.contains(e) || support.intersects(s.contracted)) continue;
    if ((y.side_of(e) - s.deleted) == ElementSet{e}) return true;
  }
  return false;
}

std::vector<SignedSet> GbMinorSearch::circuits_of(const GbState& s) const {
  return minor_family(circuits_, s.deleted, s.contracted);
}

std::vector<SignedSet> GbMinorSearch::cocircuits_of(const GbState& s) const {
  return minor_family(cocircuits_, s.contracted, s.deleted);
}

bool GbMinorSearch::explore(
    int min_size, const std::function<bool(const GbState&)>& visit) const {
  const ElementSet ground = ElementSet::range(size_);
  std::vector<GbState> level{GbState{}};
  for (int removed = 0; !level.empty(); ++removed) {
    for (const auto& s : level) {
      if (!visit(s)) return false;
    }
    if (size_ - removed - 1 < min_size) break;
    std::vector<GbState> next;
    for (const auto& s : level) {
      (ground - s.removed()).for_each([&](int e) {
        GbState d = s;
        d.deleted.insert(e);
        next.push_back(d);
        if (butterfly_contractible(s, e)) {
          GbState c = s;
          c.contracted.insert(e);
          next.push_back(c);
        }
      });
    }
    std::sort(next.begin(), next.end(), [](const GbState& a, const GbState& b) {
      return key(a) < key(b);
    });
    next.erase(std::unique(next.begin(), next.end()), next.end());
    level = std::move(next);
  }
  return true;
}

}  // namespace noneven
