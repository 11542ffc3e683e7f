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

#include "osforge/sparse_matrix.hpp"

#include <algorithm>
#include <stdexcept>

#include "osforge/kernels.hpp"

namespace osforge::la {

namespace {

void check_index(int r, int c, int rows, int cols) {
  if (r < 0 || r >= rows || c < 0 || c >= cols) {
    throw std::out_of_range("SparseMatrix: index out of range");
  }
}

}  // namespace

SparseMatrix::SparseMatrix(Field field, int rows, int cols)
    : field_(field), rows_(rows), cols_(cols), rows_data_(rows) {
  if (rows < 0 || cols < 0) {
    throw std::invalid_argument("SparseMatrix: negative dimension");
  }
}

void SparseMatrix::set(int r, int c, const Scalar& v) {
  check_index(r, c, rows_, cols_);
  Row& row = rows_data_[r];
  auto it = std::lower_bound(
      row.begin(), row.end(), c,
      [](const std::pair<int, Scalar>& e, int col) { return e.first < col; });
  if (it != row.end() && it->first == c) {
    if (field_.is_zero(v)) {
      row.erase(it);
    } else {
      it->second = v;
    }
  } else if (!field_.is_zero(v)) {
    row.insert(it, {c, v});
  }
}

void SparseMatrix::add_at(int r, int c, const Scalar& v) {
  if (field_.is_zero(v)) return;
  check_index(r, c, rows_, cols_);
  Row& row = rows_data_[r];
  auto it = std::lower_bound(
      row.begin(), row.end(), c,
      [](const std::pair<int, Scalar>& e, int col) { return e.first < col; });
  if (it != row.end() && it->first == c) {
    Scalar s = field_.add(it->second, v);
    if (field_.is_zero(s)) {
      row.erase(it);
    } else {
      it->second = s;
    }
  } else {
    row.insert(it, {c, v});
  }
}

Scalar SparseMatrix::get(int r, int c) const {
  check_index(r, c, rows_, cols_);
  const Row& row = rows_data_[r];
  auto it = std::lower_bound(
      row.begin(), row.end(), c,
      [](const std::pair<int, Scalar>& e, int col) { return e.first < col; });
  if (it != row.end() && it->first == c) return it->second;
  return field_.zero();
}

void SparseMatrix::set_row(int r, Row row) {
  check_index(r, 0, rows_, cols_ > 0 ? cols_ : 1);
  rows_data_[r] = std::move(row);
}

std::size_t SparseMatrix::nnz() const {
  std::size_t total = 0;
  for (const Row& row : rows_data_) total += row.size();
  return total;
}

bool SparseMatrix::is_zero() const { return nnz() == 0; }

SparseMatrix SparseMatrix::transposed() const {
  SparseMatrix t(field_, cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (const auto& [c, v] : rows_data_[r]) {
      t.rows_data_[c].push_back({r, v});
    }
  }
  return t;  // rows already sorted: r is increasing per column
}

SparseMatrix SparseMatrix::vstack(const std::vector<SparseMatrix>& parts) {
  if (parts.empty()) throw std::invalid_argument("vstack: empty");
  int cols = parts[0].cols();
  int rows = 0;
  for (const auto& p : parts) {
    if (p.cols() != cols || p.field() != parts[0].field()) {
      throw std::invalid_argument("vstack: shape or field mismatch");
    }
    rows += p.rows();
  }
  SparseMatrix out(parts[0].field(), rows, cols);
  int at = 0;
  for (const auto& p : parts) {
    for (int r = 0; r < p.rows(); ++r) out.rows_data_[at + r] = p.rows_data_[r];
    at += p.rows();
  }
  return out;
}

SparseMatrix SparseMatrix::hstack(const std::vector<SparseMatrix>& parts) {
  if (parts.empty()) throw std::invalid_argument("hstack: empty");
  int rows = parts[0].rows();
  int cols = 0;
  for (const auto& p : parts) {
    if (p.rows() != rows || p.field() != parts[0].field()) {
      throw std::invalid_argument("hstack: shape or field mismatch");
    }
    cols += p.cols();
  }
  SparseMatrix out(parts[0].field(), rows, cols);
  int shift = 0;
  for (const auto& p : parts) {
    for (int r = 0; r < rows; ++r) {
      for (const auto& [c, v] : p.rows_data_[r]) {
        out.rows_data_[r].push_back({c + shift, v});
      }
    }
    shift += p.cols();
  }
  return out;
}

SparseMatrix SparseMatrix::identity(const Field& field, int n) {
  SparseMatrix out(field, n, n);
  for (int i = 0; i < n; ++i) out.rows_data_[i].push_back({i, field.one()});
  return out;
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& rhs) const {
  if (cols_ != rhs.rows_ || field_ != rhs.field_) {
    throw std::invalid_argument("multiply: shape or field mismatch");
  }
  SparseMatrix out(field_, rows_, rhs.cols_);
  for (int r = 0; r < rows_; ++r) {
    std::vector<Scalar> acc(rhs.cols_, field_.zero());
    std::vector<bool> used(rhs.cols_, false);
    for (const auto& [k, v] : rows_data_[r]) {
      for (const auto& [c, w] : rhs.rows_data_[k]) {
        acc[c] = field_.add(acc[c], field_.mul(v, w));
        used[c] = true;
      }
    }
    Row row;
    for (int c = 0; c < rhs.cols_; ++c) {
      if (used[c] && !field_.is_zero(acc[c])) row.push_back({c, acc[c]});
    }
    out.rows_data_[r] = std::move(row);
  }
  return out;
}

SparseMatrix::Row SparseMatrix::apply(const Row& v) const {
  std::vector<Scalar> acc(rows_, field_.zero());
  std::vector<bool> used(rows_, false);
  for (const auto& [c, x] : v) {
    if (c < 0 || c >= cols_) throw std::out_of_range("apply: bad index");
  }
  for (int r = 0; r < rows_; ++r) {
    auto it = rows_data_[r].begin();
    for (const auto& [c, x] : v) {
      while (it != rows_data_[r].end() && it->first < c) ++it;
      if (it == rows_data_[r].end()) break;
      if (it->first == c) {
        acc[r] = field_.add(acc[r], field_.mul(it->second, x));
        used[r] = true;
      }
    }
  }
  Row out;
  for (int r = 0; r < rows_; ++r) {
    if (used[r] && !field_.is_zero(acc[r])) out.push_back({r, acc[r]});
  }
  return out;
}

bool SparseMatrix::operator==(const SparseMatrix& o) const {
  if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (int r = 0; r < rows_; ++r) {
    const Row& a = rows_data_[r];
    const Row& b = o.rows_data_[r];
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (a[k].first != b[k].first || !field_.eq(a[k].second, b[k].second)) {
        return false;
      }
    }
  }
  return true;
}

namespace {

// --- dense mod-p elimination ---------------------------------------------

struct DenseElim {
  std::vector<std::vector<std::int64_t>> rows;
  std::vector<int> pivot_cols;
  int nrows = 0;
  int ncols = 0;
};

// full_rref: also clear entries above pivots (Gauss-Jordan); rank-only runs
// skip that and stop once the rank is maximal.
DenseElim dense_eliminate(const SparseMatrix& m, bool full_rref) {
  const Field& f = m.field();
  const std::int64_t p = f.characteristic();
  DenseElim e;
  e.nrows = m.rows();
  e.ncols = m.cols();
  e.rows.assign(e.nrows, std::vector<std::int64_t>(e.ncols, 0));
  for (int r = 0; r < e.nrows; ++r) {
    for (const auto& [c, v] : m.row(r)) e.rows[r][c] = f.residue(v);
  }

  const bool lazy =
      (static_cast<__int128>(p) * p * (e.ncols + 1)) < (static_cast<__int128>(1) << 62);
  const AxpyFn axpy = select_axpy();

  auto canon = [p](std::int64_t v) {
    v %= p;
    if (v < 0) v += p;
    return v;
  };

  const int max_rank = std::min(e.nrows, e.ncols);
  int next = 0;
  for (int col = 0; col < e.ncols && next < e.nrows; ++col) {
    int piv = -1;
    for (int q = next; q < e.nrows; ++q) {
      e.rows[q][col] = canon(e.rows[q][col]);
      if (e.rows[q][col] != 0) {
        piv = q;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(e.rows[piv], e.rows[next]);

    std::vector<std::int64_t>& prow = e.rows[next];
    for (int j = col; j < e.ncols; ++j) prow[j] = canon(prow[j]);
    // entries left of col are exact zeros from earlier eliminations
    if (prow[col] != 1) {
      Scalar inv = f.inv(f.from_residue(prow[col]));
      std::int64_t iv = f.residue(inv);
      for (int j = col; j < e.ncols; ++j) prow[j] = canon(prow[j] * iv % p);
    }

    const int q_begin = full_rref ? 0 : next + 1;
    for (int q = q_begin; q < e.nrows; ++q) {
      if (q == next) continue;
      std::int64_t c = canon(e.rows[q][col]);
      if (c == 0) {
        e.rows[q][col] = 0;
        continue;
      }
      if (lazy) {
        axpy(e.rows[q].data() + col, prow.data() + col, c, e.ncols - col);
      } else {
        axpy_submul_mod(e.rows[q].data() + col, prow.data() + col, c, p,
                        e.ncols - col);
      }
    }
    e.pivot_cols.push_back(col);
    ++next;
    if (!full_rref && next == max_rank) break;
  }

  if (full_rref) {
    for (int r = 0; r < next; ++r) {
      for (auto& v : e.rows[r]) v = canon(v);
    }
  }
  return e;
}

// --- generic sparse elimination (rationals, oversized primes) -------------

using Row = SparseMatrix::Row;

const Scalar* row_find(const Row& row, int col) {
  auto it = std::lower_bound(
      row.begin(), row.end(), col,
      [](const std::pair<int, Scalar>& e, int c) { return e.first < c; });
  if (it != row.end() && it->first == col) return &it->second;
  return nullptr;
}

Row row_scale(const Field& f, const Row& row, const Scalar& c) {
  Row out;
  out.reserve(row.size());
  for (const auto& [col, v] : row) {
    Scalar s = f.mul(v, c);
    if (!f.is_zero(s)) out.push_back({col, s});
  }
  return out;
}

// a - c*b, sorted merge
Row row_submul(const Field& f, const Row& a, const Scalar& c, const Row& b) {
  Row out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      Scalar s = f.neg(f.mul(c, b[j].second));
      if (!f.is_zero(s)) out.push_back({b[j].first, s});
      ++j;
    } else {
      Scalar s = f.sub(a[i].second, f.mul(c, b[j].second));
      if (!f.is_zero(s)) out.push_back({a[i].first, s});
      ++i;
      ++j;
    }
  }
  return out;
}

struct SparseElim {
  std::vector<Row> finished;  // pivot order
  std::vector<int> pivot_cols;
};

SparseElim sparse_eliminate(const SparseMatrix& m) {
  const Field& f = m.field();
  std::vector<Row> active;
  active.reserve(m.rows());
  for (int r = 0; r < m.rows(); ++r) {
    if (!m.row(r).empty()) active.push_back(m.row(r));
  }
  SparseElim e;
  for (;;) {
    int best = -1;
    for (std::size_t q = 0; q < active.size(); ++q) {
      if (active[q].empty()) continue;
      if (best < 0 || active[q].front().first < active[best].front().first) {
        best = static_cast<int>(q);
      }
    }
    if (best < 0) break;
    Row prow = std::move(active[best]);
    active.erase(active.begin() + best);
    int pc = prow.front().first;
    if (!f.is_one(prow.front().second)) {
      prow = row_scale(f, prow, f.inv(prow.front().second));
    }
    for (Row& row : active) {
      if (const Scalar* c = row_find(row, pc)) {
        row = row_submul(f, row, *c, prow);
      }
    }
    for (Row& row : e.finished) {
      if (const Scalar* c = row_find(row, pc)) {
        row = row_submul(f, row, *c, prow);
      }
    }
    e.finished.push_back(std::move(prow));
    e.pivot_cols.push_back(pc);
  }
  return e;
}

}  // namespace

RrefResult rref(const SparseMatrix& m) {
  const Field& f = m.field();
  if (f.is_prime_field()) {
    DenseElim e = dense_eliminate(m, /*full_rref=*/true);
    SparseMatrix reduced(f, static_cast<int>(e.pivot_cols.size()), m.cols());
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
      Row row;
      for (int c = 0; c < e.ncols; ++c) {
        if (e.rows[r][c] != 0) row.push_back({c, f.from_residue(e.rows[r][c])});
      }
      reduced.set_row(static_cast<int>(r), std::move(row));
    }
    return RrefResult{std::move(reduced), std::move(e.pivot_cols)};
  }
  SparseElim e = sparse_eliminate(m);
  SparseMatrix reduced(f, static_cast<int>(e.pivot_cols.size()), m.cols());
  for (std::size_t r = 0; r < e.finished.size(); ++r) {
    reduced.set_row(static_cast<int>(r), std::move(e.finished[r]));
  }
  return RrefResult{std::move(reduced), std::move(e.pivot_cols)};
}

int rank(const SparseMatrix& m) {
  if (m.field().is_prime_field()) {
    DenseElim e = dense_eliminate(m, /*full_rref=*/false);
    return static_cast<int>(e.pivot_cols.size());
  }
  return static_cast<int>(sparse_eliminate(m).pivot_cols.size());
}

SparseMatrix kernel_basis(const SparseMatrix& m) {
  const Field& f = m.field();
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : r.pivot_cols) is_pivot[c] = true;

  int nullity = m.cols() - r.rank();
  SparseMatrix out(f, nullity, m.cols());
  int at = 0;
  for (int free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    Row vec;
    for (int k = 0; k < r.rank(); ++k) {
      Scalar v = r.reduced.get(k, free_col);
      if (!f.is_zero(v)) vec.push_back({r.pivot_cols[k], f.neg(v)});
    }
    vec.push_back({free_col, f.one()});
    std::sort(vec.begin(), vec.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    out.set_row(at++, std::move(vec));
  }
  return out;
}

std::optional<std::vector<Scalar>> coords_in_rowspace(
    const RrefResult& r, const SparseMatrix::Row& y) {
  const Field& f = r.reduced.field();
  std::vector<Scalar> coords;
  coords.reserve(r.pivot_cols.size());
  for (std::size_t k = 0; k < r.pivot_cols.size(); ++k) {
    const Scalar* v = row_find(y, r.pivot_cols[k]);
    coords.push_back(v ? *v : f.zero());
  }
  // membership: residual must vanish
  Row residual = y;
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (f.is_zero(coords[k])) continue;
    residual = row_submul(f, residual, coords[k],
                          r.reduced.row(static_cast<int>(k)));
  }
  if (!residual.empty()) return std::nullopt;
  return coords;
}

SparseMatrix::Row reduce_mod_rowspace(const RrefResult& r,
                                      const SparseMatrix::Row& y) {
  const Field& f = r.reduced.field();
  Row out = y;
  for (std::size_t k = 0; k < r.pivot_cols.size(); ++k) {
    if (const Scalar* c = row_find(out, r.pivot_cols[k])) {
      out = row_submul(f, out, *c, r.reduced.row(static_cast<int>(k)));
    }
  }
  return out;
}

bool same_rowspace(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.field() != b.field() || a.cols() != b.cols()) return false;
  return rref(a).reduced == rref(b).reduced;
}

}  // namespace osforge::la
