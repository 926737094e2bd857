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

#include <gmpxx.h>

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "noneven/element_set.hpp"

namespace noneven {

// Exact rational scalar (always reduced, positive denominator).
using Rational = mpq_class;

// Dense integer matrix, row-major. Input type of the TU checker.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::int64_t> entries;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), entries(std::size_t(r) * c, 0) {}
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  std::int64_t& at(int r, int c) { return entries[std::size_t(r) * cols + c]; }
  std::int64_t at(int r, int c) const { return entries[std::size_t(r) * cols + c]; }
};

// Dense matrix with entries in {-1, 0, +1}. Columns are matroid elements.
class TUMatrix {
 public:
  TUMatrix() = default;
  // Zero matrix.
  TUMatrix(int rows, int cols);
  // Throws PreconditionError if an entry is outside {-1, 0, 1} or the row
  // lengths disagree.
  static TUMatrix from_rows(const std::vector<std::vector<int>>& rows);
  // Rows of `rows` count and `cols` width; `cols` is needed for 0-row input.
  static TUMatrix from_rows(const std::vector<std::vector<int>>& rows, int cols);
  static TUMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int at(int r, int c) const { return data_[std::size_t(r) * cols_ + c]; }
  void set(int r, int c, int v);

  std::vector<int> column(int c) const;
  bool column_is_zero(int c) const;
  // Keeps the listed columns, in the given order.
  TUMatrix select_columns(std::span<const int> cols) const;
  TUMatrix select_columns(ElementSet cols) const;
  TUMatrix without_row(int r) const;
  // Negates the listed columns.
  TUMatrix negate_columns(ElementSet cols) const;
  IntMatrix to_int() const;

  friend bool operator==(const TUMatrix&, const TUMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::int8_t> data_;
};

// Rank over the rationals (fraction-free elimination, exact for any integers).
int rank(const TUMatrix& m);
int rank(const IntMatrix& m);
int rank_of_columns(const TUMatrix& m, ElementSet cols);

// Exact determinant of a square integer matrix.
mpz_class determinant(const IntMatrix& m);

// Rows form a {-1,0,1} basis of ker(m); one row per non-pivot column of the
// reduced row echelon form, first non-zero entry positive. Throws
// NotTotallyUnimodular when unimodular row reduction breaks down.
TUMatrix kernel_basis(const TUMatrix& m);

// Result of brute-force total-unimodularity checking.
struct TuVerdict {
  enum class Kind { kVerified, kRefuted, kUncheckedAboveOrder };
  Kind kind = Kind::kVerified;
  int checked_order = 0;
  // Offending submatrix when refuted.
  std::vector<int> witness_rows;
  std::vector<int> witness_cols;
  mpz_class witness_determinant;

  bool refuted() const { return kind == Kind::kRefuted; }
};

inline constexpr int kDefaultTuOrder = 6;

// Checks every square submatrix up to `max_order`.
TuVerdict check_tu(const IntMatrix& m, int max_order = kDefaultTuOrder);

// Returns a TU matrix with the same row space in which column `col` is the
// first unit vector: the first row holding a non-zero entry in `col` is moved
// to the top, normalised to +1 and used to clear the column. Throws
// PreconditionError on a zero column.
TUMatrix pivot_unit_column(const TUMatrix& m, int col);

// Non-negative coefficients a with sum_j a_j cols[j] == target, found by
// phase-1 simplex under Bland's rule; nullopt when infeasible.
std::optional<std::vector<Rational>> conical_feasibility(
    const std::vector<std::vector<int>>& cols, const std::vector<int>& target);

// ---------------------------------------------------------------------------
// GF(2)

using GF2Vector = boost::dynamic_bitset<std::uint64_t>;

struct GF2Matrix {
  int cols = 0;
  std::vector<GF2Vector> rows;

  GF2Matrix() = default;
  explicit GF2Matrix(int c) : cols(c) {}
  void add_row(GF2Vector row) { rows.push_back(std::move(row)); }
  // Row given by the members of `s` among the first `cols` positions.
  void add_row(ElementSet s);
};

GF2Vector to_gf2(ElementSet s, int length);
ElementSet from_gf2(const GF2Vector& v);

int gf2_rank(const GF2Matrix& a);
// Some x with a x = b, free variables zero, pivots chosen left to right.
std::optional<GF2Vector> gf2_solve(const GF2Matrix& a, const GF2Vector& b);
// Basis of { y : y^T a = 0 } (vectors of length a.rows.size()).
std::vector<GF2Vector> gf2_left_kernel(const GF2Matrix& a);

}  // namespace noneven
