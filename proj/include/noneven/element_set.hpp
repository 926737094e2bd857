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

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace noneven {

// Upper limit on the ground-set size of any matroid or edge set handled here.
inline constexpr int kMaxElements = 64;

// A subset of {0, ..., 63}, stored as a bit mask. Elements are column
// positions of the representing matrix (or edge positions of a digraph).
class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}
  ElementSet(std::initializer_list<int> elements) {
    for (int e : elements) insert(e);
  }

  static ElementSet from_indices(const std::vector<int>& indices) {
    ElementSet s;
    for (int e : indices) s.insert(e);
    return s;
  }
  // {0, ..., n - 1}.
  static constexpr ElementSet range(int n) {
    return ElementSet(n >= 64 ? ~std::uint64_t{0}
                              : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int e) const { return (bits_ >> e) & 1U; }
  constexpr bool is_subset_of(ElementSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(ElementSet other) const {
    return (bits_ & other.bits_) != 0;
  }
  // Least element; undefined on the empty set.
  constexpr int front() const { return std::countr_zero(bits_); }

  constexpr void insert(int e) { bits_ |= std::uint64_t{1} << e; }
  constexpr void erase(int e) { bits_ &= ~(std::uint64_t{1} << e); }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(std::countr_zero(b));
    }
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(std::countr_zero(b));
  }

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ | b.bits_);
  }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ & b.bits_);
  }
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ & ~b.bits_);
  }
  // Symmetric difference.
  friend constexpr ElementSet operator^(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ ^ b.bits_);
  }
  constexpr ElementSet& operator|=(ElementSet o) { bits_ |= o.bits_; return *this; }
  constexpr ElementSet& operator&=(ElementSet o) { bits_ &= o.bits_; return *this; }
  constexpr ElementSet& operator-=(ElementSet o) { bits_ &= ~o.bits_; return *this; }
  constexpr ElementSet& operator^=(ElementSet o) { bits_ ^= o.bits_; return *this; }

  friend constexpr bool operator==(ElementSet, ElementSet) = default;
  // Orders by size first, then lexicographically by sorted element list.
  friend std::strong_ordering operator<=>(ElementSet a, ElementSet b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    if (a.bits_ == b.bits_) return std::strong_ordering::equal;
    // The lexicographically smaller sorted list holds the least element of
    // the symmetric difference.
    const int first = std::countr_zero(a.bits_ ^ b.bits_);
    return a.contains(first) ? std::strong_ordering::less
                             : std::strong_ordering::greater;
  }

 private:
  std::uint64_t bits_ = 0;
};

// Ordered partition (positive, negative) of a subset of the ground set.
struct SignedSet {
  ElementSet positive;
  ElementSet negative;

  ElementSet support() const { return positive | negative; }
  SignedSet negated() const { return {negative, positive}; }
  bool is_directed() const { return positive.empty() || negative.empty(); }
  // The side of the partition that holds e (e must be in the support).
  ElementSet side_of(int e) const {
    return positive.contains(e) ? positive : negative;
  }
  // Representative of {X, -X} whose least element is positive.
  SignedSet canonical() const {
    const ElementSet s = support();
    if (s.empty() || positive.contains(s.front())) return *this;
    return negated();
  }
  // Signed set with elements of `flip` moved to the opposite side.
  SignedSet reoriented(ElementSet flip) const {
    return {(positive - flip) | (negative & flip),
            (negative - flip) | (positive & flip)};
  }
  // Restriction to `keep`.
  SignedSet restricted(ElementSet keep) const {
    return {positive & keep, negative & keep};
  }

  friend bool operator==(const SignedSet&, const SignedSet&) = default;
  friend std::strong_ordering operator<=>(const SignedSet& a,
                                          const SignedSet& b) {
    if (auto c = a.support() <=> b.support(); c != 0) return c;
    return a.positive.bits() <=> b.positive.bits();
  }
};

// Literal directedness test: one side of the partition is empty.
inline bool is_directed(const SignedSet& s) { return s.is_directed(); }

}  // namespace noneven
