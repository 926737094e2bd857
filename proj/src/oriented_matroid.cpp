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

#include "noneven/oriented_matroid.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "noneven/errors.hpp"
#include "noneven/gb_search.hpp"
#include "noneven/signed_family.hpp"

namespace noneven {

struct OrientedMatroid::Cache {
  std::once_flag rank_once;
  int rank = 0;
  std::once_flag dual_once;
  std::unique_ptr<OrientedMatroid> dual;
  std::once_flag circuits_once;
  std::vector<SignedSet> circuits;
};

namespace {

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (int i = 1; i <= n; ++i) out.push_back("e" + std::to_string(i));
  return out;
}

}  // namespace

OrientedMatroid::OrientedMatroid() : OrientedMatroid(TUMatrix(0, 0)) {}

OrientedMatroid::OrientedMatroid(TUMatrix rep)
    : OrientedMatroid(rep, default_labels(rep.cols())) {}

OrientedMatroid::OrientedMatroid(TUMatrix rep, std::vector<std::string> labels)
    : rep_(std::move(rep)),
      labels_(std::move(labels)),
      cache_(std::make_shared<Cache>()) {
  if (int(labels_.size()) != rep_.cols()) {
    throw PreconditionError("label count does not match column count");
  }
  auto sorted = labels_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw PreconditionError("element labels must be unique");
  }
}

OrientedMatroid OrientedMatroid::checked(TUMatrix rep,
                                         std::vector<std::string> labels,
                                         int tu_order) {
  const TuVerdict v = check_tu(rep.to_int(), tu_order);
  if (v.refuted()) {
    throw NotTotallyUnimodular("square submatrix of order " +
                               std::to_string(v.witness_rows.size()) +
                               " has determinant " +
                               v.witness_determinant.get_str());
  }
  return OrientedMatroid(std::move(rep), std::move(labels));
}

int OrientedMatroid::find(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  return it == labels_.end() ? -1 : int(it - labels_.begin());
}

std::vector<std::string> OrientedMatroid::labels_of(ElementSet s) const {
  std::vector<std::string> out;
  s.for_each([&](int e) { out.push_back(labels_.at(e)); });
  return out;
}

int OrientedMatroid::rank() const {
  std::call_once(cache_->rank_once,
                 [&] { cache_->rank = noneven::rank(rep_); });
  return cache_->rank;
}

const OrientedMatroid& OrientedMatroid::dual() const {
  std::call_once(cache_->dual_once, [&] {
    cache_->dual =
        std::make_unique<OrientedMatroid>(kernel_basis(rep_), labels_);
  });
  return *cache_->dual;
}

const std::vector<SignedSet>& OrientedMatroid::circuits(int bound) const {
  if (size() > bound) {
    throw BoundExceeded("circuit enumeration refused: " +
                        std::to_string(size()) + " elements exceeds bound " +
                        std::to_string(bound));
  }
  std::call_once(cache_->circuits_once,
                 [&] { cache_->circuits = enumerate_circuits(rep_); });
  return cache_->circuits;
}

const std::vector<SignedSet>& OrientedMatroid::cocircuits(int bound) const {
  if (size() > bound) {
    throw BoundExceeded("cocircuit enumeration refused: " +
                        std::to_string(size()) + " elements exceeds bound " +
                        std::to_string(bound));
  }
  return dual().circuits(bound);
}

std::vector<SignedSet> enumerate_circuits(const TUMatrix& rep) {
  const int n = rep.cols();
  if (n > 26) throw BoundExceeded("circuit enumeration above 26 elements");
  const int r = rank(rep);
  const std::uint32_t count = std::uint32_t{1} << n;
  // independent[s] for every subset s; subsets precede their supersets.
  std::vector<std::uint8_t> independent(count, 0);
  std::vector<SignedSet> out;
  independent[0] = 1;
  for (std::uint32_t s = 1; s < count; ++s) {
    const ElementSet set(s);
    bool all_sub = true;
    for (std::uint32_t b = s; b != 0; b &= b - 1) {
      if (!independent[s & ~(b & -b)]) {
        all_sub = false;
        break;
      }
    }
    if (!all_sub) continue;
    const int k = set.size();
    if (k <= r && rank_of_columns(rep, set) == k) {
      independent[s] = 1;
      continue;
    }
    // Minimally dependent: the kernel of the submatrix is one-dimensional.
    const TUMatrix kernel = kernel_basis(rep.select_columns(set));
    SignedSet x;
    const std::vector<int> idx = set.to_vector();
    for (int j = 0; j < k; ++j) {
      const int v = kernel.at(0, j);
      if (v > 0) x.positive.insert(idx[j]);
      if (v < 0) x.negative.insert(idx[j]);
    }
    out.push_back(x.canonical());
  }
  std::sort(out.begin(), out.end());
  return out;
}

ElementSet Minor::lift(ElementSet s) const {
  ElementSet out;
  s.for_each([&](int e) { out.insert(host_elements.at(e)); });
  return out;
}

SignedSet Minor::lift(const SignedSet& s) const {
  return {lift(s.positive), lift(s.negative)};
}

Minor delete_elements(const OrientedMatroid& m, ElementSet z) {
  if (!z.is_subset_of(m.ground())) {
    throw PreconditionError("delete: set is not within the ground set");
  }
  const std::vector<int> keep = (m.ground() - z).to_vector();
  std::vector<std::string> labels;
  for (int e : keep) labels.push_back(m.label(e));
  return Minor{OrientedMatroid(m.rep().select_columns(std::span<const int>(keep)),
                               std::move(labels)),
               keep};
}

Minor contract(const OrientedMatroid& m, ElementSet z) {
  if (!z.is_subset_of(m.ground())) {
    throw PreconditionError("contract: set is not within the ground set");
  }
  TUMatrix a = m.rep();
  std::vector<int> host(m.size());
  for (int i = 0; i < m.size(); ++i) host[i] = i;
  std::vector<std::string> labels = m.labels();
  z.for_each([&](int target) {
    const int col = int(std::find(host.begin(), host.end(), target) - host.begin());
    if (!a.column_is_zero(col)) a = pivot_unit_column(a, col).without_row(0);
    std::vector<int> keep;
    for (int c = 0; c < a.cols(); ++c) {
      if (c != col) keep.push_back(c);
    }
    a = a.select_columns(std::span<const int>(keep));
    host.erase(host.begin() + col);
    labels.erase(labels.begin() + col);
  });
  return Minor{OrientedMatroid(std::move(a), std::move(labels)), std::move(host)};
}

Minor minor(const OrientedMatroid& m, ElementSet deleted, ElementSet contracted) {
  if (deleted.intersects(contracted)) {
    throw PreconditionError("deleted and contracted sets overlap");
  }
  Minor d = delete_elements(m, deleted);
  ElementSet local;
  for (int i = 0; i < int(d.host_elements.size()); ++i) {
    if (contracted.contains(d.host_elements[i])) local.insert(i);
  }
  Minor c = contract(d.matroid, local);
  for (int& e : c.host_elements) e = d.host_elements[e];
  return c;
}

std::optional<SignedSet> is_butterfly_contractible(const OrientedMatroid& m,
                                                   int e, int bound) {
  if (e < 0 || e >= m.size()) throw PreconditionError("element out of range");
  for (const auto& y : m.cocircuits(bound)) {
    if (!y.support().contains(e)) continue;
    if (y.side_of(e) == ElementSet{e}) {
      // Orient as (S - {e}, {e}).
      return y.negative.contains(e) ? y : y.negated();
    }
  }
  return std::nullopt;
}

std::vector<GbMinor> gb_minors(const OrientedMatroid& m, int min_size,
                               int bound) {
  const GbMinorSearch search(m.size(), m.circuits(bound), m.cocircuits(bound));
  std::vector<GbMinor> out;
  std::map<std::pair<std::uint64_t, std::vector<SignedSet>>, bool> seen;
  search.explore(min_size, [&](const GbState& s) {
    auto key = std::make_pair((m.ground() - s.removed()).bits(),
                              search.circuits_of(s));
    if (seen.emplace(std::move(key), true).second) {
      out.push_back(GbMinor{minor(m, s.deleted, s.contracted), s.deleted,
                            s.contracted});
    }
    return true;
  });
  return out;
}

bool is_isomorphic(const OrientedMatroid& a, const OrientedMatroid& b,
                   int bound) {
  if (a.size() != b.size()) return false;
  if (a.rank() != b.rank()) return false;
  return families_isomorphic(a.size(), a.circuits(bound), b.size(),
                             b.circuits(bound));
}

}  // namespace noneven
