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

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lagmap {

enum class Field { kRationals, kGf2 };

// "q" or "f2".
std::string FieldName(Field field);
Field ParseField(std::string_view name);

// Dense matrix over Q (arbitrary-precision rationals, always canonical) or
// GF(2) (bit-packed rows). No floating point is involved anywhere.
class ExactMatrix {
 public:
  ExactMatrix(int rows, int cols, Field field = Field::kRationals);

  static ExactMatrix Identity(int n, Field field = Field::kRationals);
  // Over GF(2) entries must be integers; they are reduced mod 2.
  static ExactMatrix FromRows(const std::vector<std::vector<mpq_class>>& rows,
                              int cols, Field field = Field::kRationals);
  static ExactMatrix FromIntegers(
      std::initializer_list<std::initializer_list<long>> rows,
      Field field = Field::kRationals);

  Field field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  mpq_class at(int r, int c) const;
  void set(int r, int c, const mpq_class& value);
  bool row_is_zero(int r) const;

  ExactMatrix transpose() const;
  ExactMatrix select_columns(std::span<const int> cols) const;
  // Columns [first, first + count).
  ExactMatrix column_block(int first, int count) const;
  ExactMatrix without_zero_rows() const;
  ExactMatrix scaled(const mpq_class& factor) const;
  // Integer matrix reduced mod 2. InvalidArgument on non-integers.
  ExactMatrix mod2() const;

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

 private:
  std::size_t words_per_row() const { return (cols_ + 63) / 64; }

  Field field_;
  int rows_;
  int cols_;
  std::vector<mpq_class> rational_;             // row major
  std::vector<std::vector<std::uint64_t>> bits_;  // one bit row per row
};

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix HorizontalConcat(const ExactMatrix& a, const ExactMatrix& b);

int Rank(const ExactMatrix& m);

// Reduced row echelon form; zero rows are kept at the bottom.
ExactMatrix Rref(const ExactMatrix& m);

// True iff the selected columns are linearly independent. Indices must be
// distinct and in range.
bool ColumnsIndependent(const ExactMatrix& m, std::span<const int> cols);

// m^T = -m and every diagonal entry is zero. InvalidArgument if not square.
bool IsSkewSymmetric(const ExactMatrix& m);

// Same row space. InvalidArgument on a field or column-count mismatch.
bool RowSpaceEqual(const ExactMatrix& a, const ExactMatrix& b);

// Text form: a "rows cols field" header line, then one line per row with
// rationals written p/q (q omitted when 1).
std::string WriteMatrix(const ExactMatrix& m);
ExactMatrix ParseMatrix(std::string_view text);

}  // namespace lagmap
