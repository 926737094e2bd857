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

#include "noneven/signed_family.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace noneven {

std::vector<SignedSet> canonical_family(std::vector<SignedSet> family) {
  for (auto& x : family) x = x.canonical();
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  return family;
}

std::vector<SignedSet> minor_family(const std::vector<SignedSet>& host,
                                    ElementSet deleted,
                                    ElementSet contracted) {
  std::vector<SignedSet> candidates;
  candidates.reserve(host.size());
  for (const auto& x : host) {
    if (x.support().intersects(deleted)) continue;
    SignedSet r = x.restricted(ElementSet(~contracted.bits()));
    if (!r.support().empty()) candidates.push_back(r);
  }
  candidates = canonical_family(std::move(candidates));
  // Sorted by support size, so any strict subset of a candidate comes first.
  std::vector<SignedSet> out;
  for (const auto& c : candidates) {
    const ElementSet s = c.support();
    const bool minimal = std::none_of(out.begin(), out.end(), [&](const auto& k) {
      const ElementSet t = k.support();
      return t != s && t.is_subset_of(s);
    });
    if (minimal) out.push_back(c);
  }
  return out;
}

std::vector<SignedSet> compact_family(const std::vector<SignedSet>& family,
                                      ElementSet ground) {
  std::vector<int> index(kMaxElements, -1);
  int next = 0;
  ground.for_each([&](int e) { index[e] = next++; });
  std::vector<SignedSet> out;
  out.reserve(family.size());
  for (const auto& x : family) {
    SignedSet y;
    x.positive.for_each([&](int e) { y.positive.insert(index[e]); });
    x.negative.for_each([&](int e) { y.negative.insert(index[e]); });
    out.push_back(y.canonical());
  }
  return out;
}

namespace {

// Per-element isomorphism invariant.
struct ElementProfile {
  std::vector<int> circuit_sizes;  // sorted sizes of circuits holding e
  int directed = 0;                // number of directed circuits holding e

  friend bool operator==(const ElementProfile&, const ElementProfile&) = default;
  friend auto operator<=>(const ElementProfile&, const ElementProfile&) = default;
};

std::vector<ElementProfile> profiles(int n, const std::vector<SignedSet>& f) {
  std::vector<ElementProfile> out(n);
  for (const auto& x : f) {
    const int sz = x.support().size();
    const bool dir = x.is_directed();
    x.support().for_each([&](int e) {
      out[e].circuit_sizes.push_back(sz);
      if (dir) ++out[e].directed;
    });
  }
  for (auto& p : out) std::sort(p.circuit_sizes.begin(), p.circuit_sizes.end());
  return out;
}

}  // namespace

bool families_isomorphic(int n1, const std::vector<SignedSet>& a, int n2,
                         const std::vector<SignedSet>& b) {
  if (n1 != n2) return false;
  const int n = n1;
  const std::vector<SignedSet> fa = canonical_family(a);
  const std::vector<SignedSet> fb = canonical_family(b);
  if (fa.size() != fb.size()) return false;

  const auto pa = profiles(n, fa);
  const auto pb = profiles(n, fb);
  {
    auto sa = pa;
    auto sb = pb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }

  std::vector<std::vector<int>> candidates(n);
  for (int e = 0; e < n; ++e) {
    for (int f = 0; f < n; ++f) {
      if (pa[e] == pb[f]) candidates[e].push_back(f);
    }
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return candidates[x].size() < candidates[y].size();
  });
  std::vector<int> depth_of(n);
  for (int d = 0; d < n; ++d) depth_of[order[d]] = d;

  // Each circuit is checked as soon as its last element is assigned.
  std::vector<std::vector<const SignedSet*>> checks(n);
  for (const auto& x : fa) {
    int deepest = 0;
    x.support().for_each([&](int e) { deepest = std::max(deepest, depth_of[e]); });
    checks[deepest].push_back(&x);
  }

  std::vector<int> sigma(n, -1);
  std::uint64_t used = 0;
  auto image_in_b = [&](const SignedSet& x) {
    SignedSet y;
    x.positive.for_each([&](int e) { y.positive.insert(sigma[e]); });
    x.negative.for_each([&](int e) { y.negative.insert(sigma[e]); });
    return std::binary_search(fb.begin(), fb.end(), y.canonical());
  };

  std::function<bool(int)> assign = [&](int depth) {
    if (depth == n) return true;
    const int e = order[depth];
    for (int f : candidates[e]) {
      if ((used >> f) & 1U) continue;
      sigma[e] = f;
      used |= std::uint64_t{1} << f;
      const bool ok = std::all_of(checks[depth].begin(), checks[depth].end(),
                                  [&](const SignedSet* x) { return image_in_b(*x); });
      if (ok && assign(depth + 1)) return true;
      used &= ~(std::uint64_t{1} << f);
      sigma[e] = -1;
    }
    return false;
  };
  return assign(0);
}

}  // namespace noneven
