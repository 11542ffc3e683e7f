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

#include "osforge/module.hpp"

#include <algorithm>
#include <stdexcept>

namespace osforge::homology {

using exterior::ExteriorElement;
using exterior::Monomial;
using la::Field;
using la::Scalar;
using la::SparseMatrix;

namespace {

void check_generators(const std::vector<ExteriorElement>& gens, int n,
                      const Field& field, const char* who) {
  if (n < 0 || n > kModuleVarLimit) {
    throw std::invalid_argument(std::string(who) + ": n must be in 0.." +
                                std::to_string(kModuleVarLimit));
  }
  for (const auto& g : gens) {
    if (g.n() != n || g.field() != field) {
      throw std::invalid_argument(std::string(who) +
                                  ": generator context mismatch");
    }
    if (!g.is_homogeneous()) {
      throw std::invalid_argument(std::string(who) +
                                  ": generators must be homogeneous");
    }
  }
}

}  // namespace

GradedModuleRep::GradedModuleRep(
    int n, la::Field field, std::vector<int> dims,
    std::vector<std::vector<la::SparseMatrix>> mult,
    std::vector<std::vector<exterior::ExteriorElement>> basis)
    : n_(n),
      field_(field),
      dims_(std::move(dims)),
      mult_(std::move(mult)),
      basis_(std::move(basis)) {
  if (static_cast<int>(mult_.size()) != n_) {
    throw std::invalid_argument("GradedModuleRep: need one action per e_i");
  }
}

int GradedModuleRep::dim(int d) const {
  if (d < 0 || d >= static_cast<int>(dims_.size())) return 0;
  return dims_[d];
}

long long GradedModuleRep::total_dim() const {
  long long out = 0;
  for (int d : dims_) out += d;
  return out;
}

int GradedModuleRep::top_degree() const {
  for (int d = max_degree(); d >= 0; --d) {
    if (dims_[d] > 0) return d;
  }
  return -1;
}

poly::ZPoly GradedModuleRep::hilbert() const {
  std::vector<long long> coeffs(dims_.begin(), dims_.end());
  return poly::ZPoly(std::move(coeffs));
}

la::SparseMatrix GradedModuleRep::action(int i, int d) const {
  if (i < 1 || i > n_) {
    throw std::out_of_range("GradedModuleRep::action: generator index");
  }
  const auto& per_degree = mult_[i - 1];
  if (d >= 0 && d < static_cast<int>(per_degree.size())) return per_degree[d];
  return la::SparseMatrix(field_, dim(d + 1), dim(d));
}

la::SparseMatrix GradedModuleRep::action_of(
    const std::vector<la::Scalar>& coords, int d) const {
  if (static_cast<int>(coords.size()) != n_) {
    throw std::invalid_argument("action_of: coordinate length mismatch");
  }
  la::SparseMatrix out(field_, dim(d + 1), dim(d));
  for (int i = 0; i < n_; ++i) {
    if (field_.is_zero(coords[i])) continue;
    la::SparseMatrix a = action(i + 1, d);
    for (int r = 0; r < a.rows(); ++r) {
      for (const auto& [c, v] : a.row(r)) {
        out.add_at(r, c, field_.mul(coords[i], v));
      }
    }
  }
  return out;
}

const std::vector<exterior::ExteriorElement>& GradedModuleRep::basis(
    int d) const {
  if (!has_basis() || d < 0 || d >= static_cast<int>(basis_.size())) {
    throw std::out_of_range("GradedModuleRep::basis");
  }
  return basis_[d];
}

void GradedModuleRep::validate() const {
  for (int i = 1; i <= n_; ++i) {
    for (int j = i; j <= n_; ++j) {
      for (int d = 0; d + 2 <= static_cast<int>(dims_.size()); ++d) {
        la::SparseMatrix ij = action(i, d + 1).multiply(action(j, d));
        la::SparseMatrix ji = action(j, d + 1).multiply(action(i, d));
        bool ok;
        if (i == j) {
          ok = ij.is_zero();
        } else {
          la::SparseMatrix sum(field_, ij.rows(), ij.cols());
          for (int r = 0; r < ij.rows(); ++r) {
            for (const auto& [c, v] : ij.row(r)) sum.add_at(r, c, v);
            for (const auto& [c, v] : ji.row(r)) sum.add_at(r, c, v);
          }
          ok = sum.is_zero();
        }
        if (!ok) {
          throw std::logic_error(
              "GradedModuleRep: action relation violated at (e_" +
              std::to_string(i) + ", e_" + std::to_string(j) + "), degree " +
              std::to_string(d));
        }
      }
    }
  }
}

DegreewiseSpans degreewise_spans(const std::vector<ExteriorElement>& gens,
                                 int n, const Field& field,
                                 exterior::MonomialOrder order) {
  check_generators(gens, n, field, "degreewise_spans");
  DegreewiseSpans out{n, field, order, {}, {}, {}};
  out.basis.reserve(n + 1);
  for (int d = 0; d <= n; ++d) {
    out.basis.push_back(exterior::graded_basis(n, d, order));
  }
  for (int d = 0; d <= n; ++d) {
    std::vector<SparseMatrix::Row> rows;
    for (const auto& g : gens) {
      if (g.is_zero()) continue;
      int dg = g.degree();
      if (dg > d) continue;
      for (Monomial u : out.basis[d - dg]) {
        ExteriorElement w =
            exterior::wedge(ExteriorElement::term(n, field, u, field.one()), g);
        if (!w.is_zero()) rows.push_back(w.coords(out.basis[d]));
      }
    }
    SparseMatrix m(field, static_cast<int>(rows.size()),
                   static_cast<int>(out.basis[d].size()));
    for (std::size_t r = 0; r < rows.size(); ++r) {
      m.set_row(static_cast<int>(r), std::move(rows[r]));
    }
    out.span.push_back(la::rref(m));
    std::vector<Monomial> pivots;
    for (int c : out.span.back().pivot_cols) pivots.push_back(out.basis[d][c]);
    out.pivot_monomials.push_back(std::move(pivots));
  }
  return out;
}

GradedModuleRep module_from_quotient(const std::vector<ExteriorElement>& gens,
                                     int n, const Field& field) {
  DegreewiseSpans spans =
      degreewise_spans(gens, n, field, exterior::MonomialOrder::std_revlex);

  // quotient basis: non-pivot monomials per degree
  std::vector<std::vector<int>> free_cols(n + 1);
  std::vector<std::vector<int>> col_to_quot(n + 1);
  std::vector<int> dims(n + 1, 0);
  std::vector<std::vector<ExteriorElement>> basis(n + 1);
  for (int d = 0; d <= n; ++d) {
    int cols = static_cast<int>(spans.basis[d].size());
    col_to_quot[d].assign(cols, -1);
    std::vector<bool> is_pivot(cols, false);
    for (int c : spans.span[d].pivot_cols) is_pivot[c] = true;
    for (int c = 0; c < cols; ++c) {
      if (!is_pivot[c]) {
        col_to_quot[d][c] = static_cast<int>(free_cols[d].size());
        free_cols[d].push_back(c);
        basis[d].push_back(ExteriorElement::term(n, field, spans.basis[d][c],
                                                 field.one()));
      }
    }
    dims[d] = static_cast<int>(free_cols[d].size());
  }

  std::vector<std::vector<SparseMatrix>> mult(n);
  for (int i = 0; i < n; ++i) {
    mult[i].reserve(n);
    for (int d = 0; d < n; ++d) {
      SparseMatrix a(field, dims[d + 1], dims[d]);
      Monomial ei = Monomial{1} << i;
      for (int c = 0; c < dims[d]; ++c) {
        Monomial u = spans.basis[d][free_cols[d][c]];
        if (u & ei) continue;  // e_i ^ u = 0
        Monomial w = u | ei;
        Scalar sign = exterior::wedge_sign(ei, u) < 0 ? field.from_int(-1)
                                                      : field.one();
        ExteriorElement img = ExteriorElement::term(n, field, w, sign);
        SparseMatrix::Row nf = la::reduce_mod_rowspace(
            spans.span[d + 1], img.coords(spans.basis[d + 1]));
        for (const auto& [col, v] : nf) {
          a.set(col_to_quot[d + 1][col], c, v);
        }
      }
      mult[i].push_back(std::move(a));
    }
  }
  return GradedModuleRep(n, field, std::move(dims), std::move(mult),
                         std::move(basis));
}

GradedModuleRep module_from_ideal(const std::vector<ExteriorElement>& gens,
                                  int n, const Field& field) {
  DegreewiseSpans spans =
      degreewise_spans(gens, n, field, exterior::MonomialOrder::std_revlex);

  std::vector<int> dims(n + 1, 0);
  std::vector<std::vector<ExteriorElement>> basis(n + 1);
  for (int d = 0; d <= n; ++d) {
    dims[d] = spans.span[d].rank();
    for (int r = 0; r < dims[d]; ++r) {
      basis[d].push_back(ExteriorElement::from_coords(
          n, field, spans.basis[d], spans.span[d].reduced.row(r)));
    }
  }

  std::vector<std::vector<SparseMatrix>> mult(n);
  for (int i = 0; i < n; ++i) {
    mult[i].reserve(n);
    for (int d = 0; d < n; ++d) {
      SparseMatrix a(field, dims[d + 1], dims[d]);
      for (int c = 0; c < dims[d]; ++c) {
        ExteriorElement img = exterior::wedge(
            ExteriorElement::variable(n, field, i + 1), basis[d][c]);
        if (img.is_zero()) continue;
        auto coords = la::coords_in_rowspace(spans.span[d + 1],
                                             img.coords(spans.basis[d + 1]));
        if (!coords) {
          throw std::logic_error("module_from_ideal: ideal is not closed");
        }
        for (int r = 0; r < dims[d + 1]; ++r) {
          if (!field.is_zero((*coords)[r])) a.set(r, c, (*coords)[r]);
        }
      }
      mult[i].push_back(std::move(a));
    }
  }
  return GradedModuleRep(n, field, std::move(dims), std::move(mult),
                         std::move(basis));
}

std::vector<ExteriorElement> annihilator(
    const std::vector<ExteriorElement>& gens, int n, const Field& field) {
  check_generators(gens, n, field, "annihilator");
  std::vector<ExteriorElement> active;
  for (const auto& g : gens) {
    if (!g.is_zero()) active.push_back(g);
  }
  std::vector<std::vector<Monomial>> bases(n + 1);
  for (int d = 0; d <= n; ++d) {
    bases[d] = exterior::graded_basis(n, d, exterior::MonomialOrder::std_revlex);
  }

  // kernel of x -> (x g_k)_k in each degree
  std::vector<SparseMatrix> kernels;
  for (int d = 0; d <= n; ++d) {
    std::vector<SparseMatrix> blocks;
    for (const auto& g : active) {
      int dg = g.degree();
      int target = d + dg;
      int target_dim =
          target <= n ? static_cast<int>(bases[target].size()) : 0;
      SparseMatrix block(field, target_dim, static_cast<int>(bases[d].size()));
      if (target_dim > 0) {
        for (int c = 0; c < static_cast<int>(bases[d].size()); ++c) {
          ExteriorElement img = exterior::wedge(
              ExteriorElement::term(n, field, bases[d][c], field.one()), g);
          for (const auto& [row, v] : img.coords(bases[target])) {
            block.set(row, c, v);
          }
        }
      }
      blocks.push_back(std::move(block));
    }
    if (blocks.empty()) {
      blocks.push_back(SparseMatrix(field, 0, static_cast<int>(bases[d].size())));
    }
    kernels.push_back(la::kernel_basis(SparseMatrix::vstack(blocks)));
  }

  // minimal generators: each degree contributes the kernel modulo what
  // degree-1 multiples of lower-degree kernel vectors already span
  std::vector<ExteriorElement> out;
  std::vector<SparseMatrix::Row> generated;  // rows in degree-d coordinates
  for (int d = 0; d <= n; ++d) {
    std::vector<SparseMatrix::Row> old_rows;
    if (d > 0) {
      const SparseMatrix& prev = kernels[d - 1];
      for (int r = 0; r < prev.rows(); ++r) {
        ExteriorElement w = ExteriorElement::from_coords(
            n, field, bases[d - 1], prev.row(r));
        for (int i = 1; i <= n; ++i) {
          ExteriorElement img =
              exterior::wedge(ExteriorElement::variable(n, field, i), w);
          if (!img.is_zero()) old_rows.push_back(img.coords(bases[d]));
        }
      }
    }
    SparseMatrix old_mat(field, static_cast<int>(old_rows.size()),
                         static_cast<int>(bases[d].size()));
    for (std::size_t r = 0; r < old_rows.size(); ++r) {
      old_mat.set_row(static_cast<int>(r), std::move(old_rows[r]));
    }
    la::RrefResult acc = la::rref(old_mat);
    for (int r = 0; r < kernels[d].rows(); ++r) {
      SparseMatrix::Row nf = la::reduce_mod_rowspace(acc, kernels[d].row(r));
      if (nf.empty()) continue;
      out.push_back(ExteriorElement::from_coords(n, field, bases[d], nf));
      std::vector<SparseMatrix> stack = {
          acc.reduced, SparseMatrix(field, 1, static_cast<int>(bases[d].size()))};
      stack[1].set_row(0, std::move(nf));
      acc = la::rref(SparseMatrix::vstack(stack));
    }
  }
  return out;
}

GradedModuleRep quotient_by_linear_form(const GradedModuleRep& m,
                                        const std::vector<Scalar>& v) {
  const Field& field = m.field();
  int n = m.n();
  if (static_cast<int>(v.size()) != n) {
    throw std::invalid_argument("quotient_by_linear_form: bad coordinates");
  }
  int pivot = -1;
  for (int i = n - 1; i >= 0; --i) {
    if (!field.is_zero(v[i])) {
      pivot = i;
      break;
    }
  }
  if (pivot < 0) {
    throw std::invalid_argument("quotient_by_linear_form: v = 0");
  }

  int top = m.max_degree();
  // row space of vM in each degree
  std::vector<la::RrefResult> image;
  image.reserve(top + 1);
  for (int d = 0; d <= top; ++d) {
    image.push_back(la::rref(m.action_of(v, d - 1).transposed()));
  }

  std::vector<int> dims(top + 1, 0);
  std::vector<std::vector<int>> free_idx(top + 1);
  std::vector<std::vector<int>> to_quot(top + 1);
  std::vector<std::vector<ExteriorElement>> basis;
  if (m.has_basis()) basis.resize(top + 1);
  for (int d = 0; d <= top; ++d) {
    int full = m.dim(d);
    to_quot[d].assign(full, -1);
    std::vector<bool> is_pivot(full, false);
    for (int c : image[d].pivot_cols) is_pivot[c] = true;
    for (int c = 0; c < full; ++c) {
      if (!is_pivot[c]) {
        to_quot[d][c] = static_cast<int>(free_idx[d].size());
        free_idx[d].push_back(c);
        if (m.has_basis()) basis[d].push_back(m.basis(d)[c]);
      }
    }
    dims[d] = static_cast<int>(free_idx[d].size());
  }

  std::vector<std::vector<SparseMatrix>> mult(n - 1);
  int at = 0;
  for (int i = 1; i <= n; ++i) {
    if (i == pivot + 1) continue;
    auto& per_degree = mult[at++];
    for (int d = 0; d < top; ++d) {
      SparseMatrix a(field, dims[d + 1], dims[d]);
      SparseMatrix bt = m.action(i, d).transposed();  // rows = images
      for (int c = 0; c < dims[d]; ++c) {
        SparseMatrix::Row nf =
            la::reduce_mod_rowspace(image[d + 1], bt.row(free_idx[d][c]));
        for (const auto& [col, val] : nf) {
          a.set(to_quot[d + 1][col], c, val);
        }
      }
      per_degree.push_back(std::move(a));
    }
  }
  return GradedModuleRep(n - 1, field, std::move(dims), std::move(mult),
                         std::move(basis));
}

}  // namespace osforge::homology
