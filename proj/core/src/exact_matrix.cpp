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

#include "lagmap/exact_matrix.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "lagmap/error.hpp"

namespace lagmap {
namespace {

using IntegerRows = std::vector<std::vector<mpz_class>>;

void RequireSameField(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.field() != b.field()) {
    throw InvalidArgument("mixed-field operation (" + FieldName(a.field()) +
                          " with " + FieldName(b.field()) + ")");
  }
}

// Scales every row by the lcm of its denominators.
IntegerRows ClearDenominators(const ExactMatrix& m) {
  IntegerRows out(m.rows(), std::vector<mpz_class>(m.cols()));
  for (int r = 0; r < m.rows(); ++r) {
    mpz_class scale = 1;
    for (int c = 0; c < m.cols(); ++c) {
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(),
              m.at(r, c).get_den_mpz_t());
    }
    for (int c = 0; c < m.cols(); ++c) {
      mpq_class v = m.at(r, c);
      out[r][c] = v.get_num() * (scale / v.get_den());
    }
  }
  return out;
}

// Fraction-free Gauss-Jordan elimination. Every division by the previous
// pivot is exact; on return each pivot row holds the same pivot value and
// the pivot columns are cleared in every other row. Returns pivot columns.
std::vector<int> FractionFreeReduce(IntegerRows& m, int cols) {
  const int rows = static_cast<int>(m.size());
  std::vector<int> pivots;
  mpz_class previous = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const mpz_class pivot = m[r][c];
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      const mpz_class factor = m[i][c];
      for (int j = 0; j < cols; ++j) {
        mpz_class value = pivot * m[i][j] - factor * m[r][j];
        mpz_divexact(value.get_mpz_t(), value.get_mpz_t(),
                     previous.get_mpz_t());
        m[i][j] = std::move(value);
      }
    }
    previous = pivot;
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

using BitRows = std::vector<std::vector<std::uint64_t>>;

bool TestBit(const std::vector<std::uint64_t>& row, int c) {
  return (row[c / 64] >> (c % 64)) & 1U;
}

std::vector<int> EliminateGf2(BitRows& m, int cols) {
  const int rows = static_cast<int>(m.size());
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && !TestBit(m[p], c)) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (int i = 0; i < rows; ++i) {
      if (i != r && TestBit(m[i], c)) {
        for (std::size_t w = 0; w < m[i].size(); ++w) m[i][w] ^= m[r][w];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

BitRows ToBitRows(const ExactMatrix& m) {
  BitRows out(m.rows(), std::vector<std::uint64_t>((m.cols() + 63) / 64, 0));
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      if (m.at(r, c) != 0) out[r][c / 64] |= std::uint64_t{1} << (c % 64);
    }
  }
  return out;
}

}  // namespace

std::string FieldName(Field field) {
  return field == Field::kRationals ? "q" : "f2";
}

Field ParseField(std::string_view name) {
  if (name == "q") return Field::kRationals;
  if (name == "f2") return Field::kGf2;
  throw InvalidArgument("unknown field '" + std::string(name) +
                        "' (expected q or f2)");
}

ExactMatrix::ExactMatrix(int rows, int cols, Field field)
    : field_(field), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw InvalidArgument("negative matrix size");
  if (field_ == Field::kRationals) {
    rational_.assign(static_cast<std::size_t>(rows) * cols, mpq_class(0));
  } else {
    bits_.assign(rows, std::vector<std::uint64_t>(words_per_row(), 0));
  }
}

ExactMatrix ExactMatrix::Identity(int n, Field field) {
  ExactMatrix m(n, n, field);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

ExactMatrix ExactMatrix::FromRows(
    const std::vector<std::vector<mpq_class>>& rows, int cols, Field field) {
  ExactMatrix m(static_cast<int>(rows.size()), cols, field);
  for (int r = 0; r < m.rows(); ++r) {
    if (static_cast<int>(rows[r].size()) != cols) {
      throw InvalidArgument("ragged matrix rows");
    }
    for (int c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

ExactMatrix ExactMatrix::FromIntegers(
    std::initializer_list<std::initializer_list<long>> rows, Field field) {
  std::vector<std::vector<mpq_class>> values;
  int cols = 0;
  for (const auto& row : rows) {
    values.emplace_back();
    for (long v : row) values.back().emplace_back(v);
    cols = static_cast<int>(row.size());
  }
  return FromRows(values, cols, field);
}

mpq_class ExactMatrix::at(int r, int c) const {
  if (field_ == Field::kRationals) {
    return rational_[static_cast<std::size_t>(r) * cols_ + c];
  }
  return TestBit(bits_[r], c) ? 1 : 0;
}

void ExactMatrix::set(int r, int c, const mpq_class& value) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) {
    throw InvalidArgument("matrix index out of range");
  }
  if (field_ == Field::kRationals) {
    rational_[static_cast<std::size_t>(r) * cols_ + c] = value;
    return;
  }
  if (value.get_den() != 1) {
    throw InvalidArgument("non-integer entry in a GF(2) matrix");
  }
  const std::uint64_t bit = std::uint64_t{1} << (c % 64);
  if (mpz_odd_p(value.get_num_mpz_t())) {
    bits_[r][c / 64] |= bit;
  } else {
    bits_[r][c / 64] &= ~bit;
  }
}

bool ExactMatrix::row_is_zero(int r) const {
  if (field_ == Field::kGf2) {
    return std::all_of(bits_[r].begin(), bits_[r].end(),
                       [](std::uint64_t w) { return w == 0; });
  }
  for (int c = 0; c < cols_; ++c) {
    if (at(r, c) != 0) return false;
  }
  return true;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_, field_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
  }
  return t;
}

ExactMatrix ExactMatrix::select_columns(std::span<const int> cols) const {
  std::set<int> distinct(cols.begin(), cols.end());
  if (distinct.size() != cols.size()) {
    throw InvalidArgument("repeated column index");
  }
  for (int c : cols) {
    if (c < 0 || c >= cols_) {
      throw InvalidArgument("column index " + std::to_string(c) +
                            " out of range");
    }
  }
  ExactMatrix out(rows_, static_cast<int>(cols.size()), field_);
  for (int r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols.size(); ++k) {
      out.set(r, static_cast<int>(k), at(r, cols[k]));
    }
  }
  return out;
}

ExactMatrix ExactMatrix::column_block(int first, int count) const {
  std::vector<int> cols(count);
  for (int k = 0; k < count; ++k) cols[k] = first + k;
  return select_columns(cols);
}

ExactMatrix ExactMatrix::without_zero_rows() const {
  std::vector<int> keep;
  for (int r = 0; r < rows_; ++r) {
    if (!row_is_zero(r)) keep.push_back(r);
  }
  ExactMatrix out(static_cast<int>(keep.size()), cols_, field_);
  for (std::size_t k = 0; k < keep.size(); ++k) {
    for (int c = 0; c < cols_; ++c) out.set(static_cast<int>(k), c, at(keep[k], c));
  }
  return out;
}

ExactMatrix ExactMatrix::scaled(const mpq_class& factor) const {
  ExactMatrix out(rows_, cols_, field_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      mpq_class v = at(r, c) * factor;
      if (field_ == Field::kGf2) v = v.get_den() == 1 ? v : mpq_class(0);
      out.set(r, c, v);
    }
  }
  return out;
}

ExactMatrix ExactMatrix::mod2() const {
  ExactMatrix out(rows_, cols_, Field::kGf2);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) out.set(r, c, at(r, c));
  }
  return out;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.field_ != b.field_ || a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    return false;
  }
  return a.field_ == Field::kRationals ? a.rational_ == b.rational_
                                       : a.bits_ == b.bits_;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  RequireSameField(a, b);
  if (a.cols() != b.rows()) throw InvalidArgument("matrix size mismatch");
  ExactMatrix out(a.rows(), b.cols(), a.field());
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < b.cols(); ++c) {
      mpq_class sum = 0;
      for (int k = 0; k < a.cols(); ++k) sum += a.at(r, k) * b.at(k, c);
      out.set(r, c, sum);
    }
  }
  return out;
}

ExactMatrix HorizontalConcat(const ExactMatrix& a, const ExactMatrix& b) {
  RequireSameField(a, b);
  if (a.rows() != b.rows()) throw InvalidArgument("row count mismatch");
  ExactMatrix out(a.rows(), a.cols() + b.cols(), a.field());
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) out.set(r, c, a.at(r, c));
    for (int c = 0; c < b.cols(); ++c) out.set(r, a.cols() + c, b.at(r, c));
  }
  return out;
}

int Rank(const ExactMatrix& m) {
  if (m.field() == Field::kGf2) {
    BitRows rows = ToBitRows(m);
    return static_cast<int>(EliminateGf2(rows, m.cols()).size());
  }
  IntegerRows rows = ClearDenominators(m);
  return static_cast<int>(FractionFreeReduce(rows, m.cols()).size());
}

ExactMatrix Rref(const ExactMatrix& m) {
  ExactMatrix out(m.rows(), m.cols(), m.field());
  if (m.field() == Field::kGf2) {
    BitRows rows = ToBitRows(m);
    EliminateGf2(rows, m.cols());
    for (int r = 0; r < m.rows(); ++r) {
      for (int c = 0; c < m.cols(); ++c) out.set(r, c, TestBit(rows[r], c) ? 1 : 0);
    }
    return out;
  }
  IntegerRows rows = ClearDenominators(m);
  const std::vector<int> pivots = FractionFreeReduce(rows, m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    const mpz_class& pivot = rows[r][pivots[r]];
    for (int c = 0; c < m.cols(); ++c) {
      mpq_class v(rows[r][c], pivot);
      v.canonicalize();
      out.set(static_cast<int>(r), c, v);
    }
  }
  return out;
}

bool ColumnsIndependent(const ExactMatrix& m, std::span<const int> cols) {
  if (static_cast<int>(cols.size()) > m.rows()) {
    // Still validate the indices.
    m.select_columns(cols);
    return false;
  }
  return Rank(m.select_columns(cols)) == static_cast<int>(cols.size());
}

bool IsSkewSymmetric(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("matrix is not square");
  for (int r = 0; r < m.rows(); ++r) {
    if (m.at(r, r) != 0) return false;
    for (int c = r + 1; c < m.cols(); ++c) {
      mpq_class sum = m.at(r, c) + m.at(c, r);
      if (m.field() == Field::kGf2) {
        if (m.at(r, c) != m.at(c, r)) return false;
      } else if (sum != 0) {
        return false;
      }
    }
  }
  return true;
}

bool RowSpaceEqual(const ExactMatrix& a, const ExactMatrix& b) {
  RequireSameField(a, b);
  if (a.cols() != b.cols()) throw InvalidArgument("column count mismatch");
  return Rref(a).without_zero_rows() == Rref(b).without_zero_rows();
}

std::string WriteMatrix(const ExactMatrix& m) {
  std::ostringstream out;
  out << m.rows() << " " << m.cols() << " " << FieldName(m.field()) << "\n";
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      if (c) out << " ";
      out << m.at(r, c).get_str();
    }
    out << "\n";
  }
  return out.str();
}

ExactMatrix ParseMatrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (auto hash = line.find('#'); hash != std::string::npos) {
        line.erase(hash);
      }
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line()) throw ParseError(line_no, 0, "missing matrix header");
  std::istringstream header(line);
  int rows = -1, cols = -1;
  std::string field_name;
  if (!(header >> rows >> cols >> field_name) || rows < 0 || cols < 0) {
    throw ParseError(line_no, 0, "expected 'rows cols field'");
  }
  Field field;
  try {
    field = ParseField(field_name);
  } catch (const InvalidArgument& e) {
    throw ParseError(line_no, 0, e.what());
  }
  ExactMatrix m(rows, cols, field);
  for (int r = 0; r < rows; ++r) {
    if (!next_line()) throw ParseError(line_no, 0, "missing matrix row");
    std::istringstream row(line);
    std::string token;
    for (int c = 0; c < cols; ++c) {
      if (!(row >> token)) throw ParseError(line_no, 0, "short matrix row");
      mpq_class v;
      if (v.set_str(token, 10) != 0 || v.get_den() == 0) {
        throw ParseError(line_no, 0, "bad entry '" + token + "'");
      }
      v.canonicalize();
      m.set(r, c, v);
    }
    if (row >> token) throw ParseError(line_no, 0, "long matrix row");
  }
  return m;
}

}  // namespace lagmap
