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

#ifndef OSFORGE_SPARSE_MATRIX_HPP
#define OSFORGE_SPARSE_MATRIX_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "osforge/field.hpp"

namespace osforge::la {

// Sparse exact matrix over a Field. Rows are kept as (col, value) pairs
// sorted by column; no zero entries are stored. Logical addressing is dense,
// but graded pieces in this project never exceed 2^16 columns.
class SparseMatrix {
 public:
  using Row = std::vector<std::pair<int, Scalar>>;

  SparseMatrix(Field field, int rows, int cols);

  const Field& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  void set(int r, int c, const Scalar& v);     // overwrites; erases zeros
  void add_at(int r, int c, const Scalar& v);  // accumulates
  Scalar get(int r, int c) const;

  const Row& row(int r) const { return rows_data_[r]; }
  void set_row(int r, Row row);  // row must be sorted, zero-free

  std::size_t nnz() const;
  bool is_zero() const;

  SparseMatrix transposed() const;

  // Vertical stack: same column count.
  static SparseMatrix vstack(const std::vector<SparseMatrix>& parts);
  // Horizontal stack: same row count.
  static SparseMatrix hstack(const std::vector<SparseMatrix>& parts);

  static SparseMatrix identity(const Field& field, int n);

  SparseMatrix multiply(const SparseMatrix& rhs) const;
  // Matrix-times-column-vector; v indexed by columns.
  Row apply(const Row& v) const;

  bool operator==(const SparseMatrix& o) const;
  bool operator!=(const SparseMatrix& o) const { return !(*this == o); }

 private:
  Field field_;
  int rows_;
  int cols_;
  std::vector<Row> rows_data_;
};

struct RrefResult {
  SparseMatrix reduced;         // exactly rank() rows, canonical RREF
  std::vector<int> pivot_cols;  // strictly increasing
  int rank() const { return static_cast<int>(pivot_cols.size()); }
};

// Reduced row echelon form. Deterministic: pivots are the first nonzero
// entry in column order; no magnitude pivoting is needed in exact
// arithmetic. Over GF(p) the elimination runs on dense int64 rows with the
// runtime-selected axpy kernel; over the rationals it stays sparse.
RrefResult rref(const SparseMatrix& m);

int rank(const SparseMatrix& m);

// Rows of the result form a basis of the right kernel {x : m x = 0}.
// Deterministic: one vector per free column, in column order.
SparseMatrix kernel_basis(const SparseMatrix& m);

// Coordinates of y with respect to the rows of a canonical RREF, or nullopt
// if y is not in the row space. y is a sparse row over the same columns.
std::optional<std::vector<Scalar>> coords_in_rowspace(const RrefResult& r,
                                                      const SparseMatrix::Row& y);

// Normal form of y modulo the row space: y minus its row-space projection.
SparseMatrix::Row reduce_mod_rowspace(const RrefResult& r,
                                      const SparseMatrix::Row& y);

bool same_rowspace(const SparseMatrix& a, const SparseMatrix& b);

}  // namespace osforge::la

#endif  // OSFORGE_SPARSE_MATRIX_HPP
