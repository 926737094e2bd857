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

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "noneven/digraph.hpp"
#include "noneven/exact_linalg.hpp"
#include "noneven/oriented_matroid.hpp"
#include "noneven/signed_family.hpp"

namespace noneven::testing {

inline Digraph digraph_of(
    const std::vector<std::pair<std::string, std::string>>& edges) {
  Digraph d;
  for (const auto& [t, h] : edges) d.add_edge(t, h);
  return d;
}

inline Digraph directed_cycle(int k) {
  Digraph d;
  for (int i = 0; i < k; ++i) {
    d.add_edge("v" + std::to_string(i + 1), "v" + std::to_string((i + 1) % k + 1));
  }
  return d;
}

inline Digraph directed_path(int k) {
  Digraph d;
  for (int i = 0; i < k; ++i) {
    d.add_edge("v" + std::to_string(i + 1), "v" + std::to_string(i + 2));
  }
  return d;
}

inline OrientedMatroid directed_triangle() { return graphic_matroid(directed_cycle(3)); }
inline OrientedMatroid bicycle_matroid(int k) {
  return graphic_matroid(build_bicycle(k));
}

// Signed cycles of the underlying multigraph found by walking edge subsets in
// which every vertex has degree 0 or 2 and the edges form one component.
inline std::vector<SignedSet> signed_cycles_oracle(const Digraph& d) {
  std::vector<SignedSet> out;
  const int m = d.num_edges();
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << m); ++bits) {
    const ElementSet s(bits);
    if (s.size() == 1) {
      const Edge& e = d.edge(s.front());
      if (e.is_loop()) out.push_back({s, {}});
      continue;
    }
    std::vector<int> degree(d.num_vertices(), 0);
    bool has_loop = false;
    s.for_each([&](int i) {
      const Edge& e = d.edge(i);
      has_loop |= e.is_loop();
      ++degree[e.tail];
      ++degree[e.head];
    });
    if (has_loop) continue;
    if (std::any_of(degree.begin(), degree.end(), [](int x) { return x != 0 && x != 2; })) {
      continue;
    }
    // Walk from the least edge along its direction.
    const int first = s.front();
    SignedSet signed_set{ElementSet{first}, {}};
    ElementSet used{first};
    int at = d.edge(first).head;
    const int start = d.edge(first).tail;
    while (at != start) {
      int next = -1;
      (s - used).for_each([&](int i) {
        if (next < 0 && (d.edge(i).tail == at || d.edge(i).head == at)) next = i;
      });
      if (next < 0) break;
      used.insert(next);
      if (d.edge(next).tail == at) {
        signed_set.positive.insert(next);
        at = d.edge(next).head;
      } else {
        signed_set.negative.insert(next);
        at = d.edge(next).tail;
      }
    }
    if (used == s && at == start) out.push_back(signed_set);
  }
  return canonical_family(out);
}

// Signed bonds (edges leaving X positive) by scanning vertex subsets.
inline std::vector<SignedSet> signed_bonds_oracle(const Digraph& d) {
  const int n = d.num_vertices();
  auto components = [&](ElementSet removed) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    auto find = [&](int x) {
      while (p[x] != x) x = p[x];
      return x;
    };
    int c = n;
    for (int i = 0; i < d.num_edges(); ++i) {
      if (removed.contains(i)) continue;
      const int a = find(d.edge(i).tail), b = find(d.edge(i).head);
      if (a != b) {
        p[a] = b;
        --c;
      }
    }
    return c;
  };
  const int base = components({});
  std::vector<SignedSet> out;
  for (std::uint32_t x = 1; x + 1 < (1U << n); ++x) {
    SignedSet cut;
    for (int i = 0; i < d.num_edges(); ++i) {
      const bool t = (x >> d.edge(i).tail) & 1U, h = (x >> d.edge(i).head) & 1U;
      if (t && !h) cut.positive.insert(i);
      if (!t && h) cut.negative.insert(i);
    }
    if (!cut.support().empty() && components(cut.support()) == base + 1) {
      out.push_back(cut);
    }
  }
  return canonical_family(out);
}

inline std::vector<ElementSet> directed_supports(const std::vector<SignedSet>& f) {
  std::vector<ElementSet> out;
  for (const auto& x : f) {
    if (x.is_directed()) out.push_back(x.support());
  }
  return out;
}

// Non-evenness by trying every J.
inline bool non_even_subset_scan(const OrientedMatroid& m) {
  const auto dirs = directed_supports(m.circuits());
  for (std::uint64_t j = 0; j < (std::uint64_t{1} << m.size()); ++j) {
    const ElementSet js(j);
    if (std::all_of(dirs.begin(), dirs.end(),
                    [&](ElementSet c) { return (c & js).size() % 2 == 1; })) {
      return true;
    }
  }
  return false;
}

inline Digraph random_digraph(std::mt19937_64& rng, int max_vertices, int max_edges,
                              bool allow_loops = true) {
  std::uniform_int_distribution<int> nv(1, max_vertices);
  const int n = nv(rng);
  std::uniform_int_distribution<int> ne(0, max_edges);
  std::uniform_int_distribution<int> vertex(0, n - 1);
  Digraph d;
  for (int v = 0; v < n; ++v) d.add_vertex("v" + std::to_string(v + 1));
  const int m = ne(rng);
  for (int i = 0; i < m; ++i) {
    const int t = vertex(rng);
    int h = vertex(rng);
    if (!allow_loops && n > 1) {
      while (h == t) h = vertex(rng);
    } else if (!allow_loops) {
      break;
    }
    d.add_edge(t, h);
  }
  return d;
}

// Random {-1,0,1} matrix kept only when every square submatrix passes.
inline TUMatrix random_tu_matrix(std::mt19937_64& rng, int max_rows, int max_cols) {
  std::uniform_int_distribution<int> rows(1, max_rows), cols(1, max_cols);
  std::discrete_distribution<int> entry({1, 2, 1});
  for (;;) {
    TUMatrix a(rows(rng), cols(rng));
    for (int r = 0; r < a.rows(); ++r) {
      for (int c = 0; c < a.cols(); ++c) a.set(r, c, entry(rng) - 1);
    }
    const int order = std::min(a.rows(), a.cols());
    if (!check_tu(a.to_int(), order).refuted()) return a;
  }
}

// Mixture of graphic, cographic and general TU hosts with at most
// `max_elements` elements.
inline OrientedMatroid random_host(std::mt19937_64& rng, int max_elements) {
  std::uniform_int_distribution<int> kind(0, 2);
  switch (kind(rng)) {
    case 0:
      return graphic_matroid(random_digraph(rng, 5, max_elements));
    case 1:
      return bond_matroid(random_digraph(rng, 5, max_elements));
    default:
      return OrientedMatroid(random_tu_matrix(rng, 4, max_elements));
  }
}

// All simple digraphs (no loops or parallel edges, anti-parallel allowed) on
// n vertices, one per isomorphism class.
inline std::vector<Digraph> simple_digraphs_up_to_iso(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a != b) pairs.push_back({a, b});
    }
  }
  std::vector<int> perm(n);
  std::vector<std::vector<int>> perms;
  std::iota(perm.begin(), perm.end(), 0);
  do perms.push_back(perm); while (std::next_permutation(perm.begin(), perm.end()));

  auto pair_index = [&](int a, int b) {
    return int(std::find(pairs.begin(), pairs.end(), std::make_pair(a, b)) -
               pairs.begin());
  };
  std::set<std::uint32_t> seen;
  std::vector<Digraph> out;
  for (std::uint32_t mask = 0; mask < (1U << pairs.size()); ++mask) {
    std::uint32_t canon = mask;
    for (const auto& p : perms) {
      std::uint32_t image = 0;
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if ((mask >> i) & 1U) image |= 1U << pair_index(p[pairs[i].first], p[pairs[i].second]);
      }
      canon = std::min(canon, image);
    }
    if (!seen.insert(canon).second) continue;
    Digraph d;
    for (int v = 0; v < n; ++v) d.add_vertex("v" + std::to_string(v + 1));
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if ((canon >> i) & 1U) d.add_edge(pairs[i].first, pairs[i].second);
    }
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace noneven::testing
