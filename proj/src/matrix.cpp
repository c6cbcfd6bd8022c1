// Copyright 2026 The sigmamp Authors
// SPDX-License-Identifier: Apache-2.0

#include "sigmamp/matrix.hpp"

#include <algorithm>
#include <string>

#include "sigmamp/error.hpp"

namespace sigmamp {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, Elem{0}) {}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) throw BadInput("matrix entry count does not match its shape");
  for (Elem x : data_)
    if (!field_.contains(x)) throw BadInput("matrix entry outside the field");
}

Matrix Matrix::from_rows(const Field& field, const std::vector<Vec>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::vector<Elem> data;
  data.reserve(rows.size() * cols);
  for (const Vec& r : rows) {
    if (r.size() != cols) throw BadInput("ragged matrix rows");
    data.insert(data.end(), r.begin(), r.end());
  }
  return Matrix(field, rows.size(), cols, std::move(data));
}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Matrix Matrix::diagonal(const Field& field, std::span<const Elem> diag) {
  Matrix m(field, diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

Matrix Matrix::anti_identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, n - 1 - i) = field.one();
  return m;
}

Matrix Matrix::anti_diagonal(const Field& field, std::span<const Elem> adiag) {
  const std::size_t n = adiag.size();
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, n - 1 - i) = adiag[i];
  return m;
}

Matrix Matrix::permutation(const Field& field, std::span<const std::size_t> perm) {
  const std::size_t n = perm.size();
  std::vector<bool> seen(n, false);
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (perm[i] >= n || seen[perm[i]]) throw BadInput("not a permutation");
    seen[perm[i]] = true;
    m(i, perm[i]) = field.one();
  }
  return m;
}

Matrix Matrix::toeplitz(const Field& field, std::span<const Elem> first_row, std::span<const Elem> first_col) {
  if (first_row.size() != first_col.size()) throw BadInput("Toeplitz row and column lengths differ");
  const std::size_t n = first_row.size();
  if (n > 0 && first_row[0] != first_col[0]) throw BadInput("Toeplitz corner mismatch: first_row[0] != first_col[0]");
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = j >= i ? first_row[j - i] : first_col[i - j];
  for (Elem x : m.data_)
    if (!field.contains(x)) throw BadInput("Toeplitz entry outside the field");
  return m;
}

Vec Matrix::col(std::size_t j) const {
  Vec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::frobenius(unsigned e) const {
  Matrix out = *this;
  for (Elem& x : out.data_) x = field_.frobenius(x, e);
  return out;
}

Matrix Matrix::scaled(Elem s) const {
  Matrix out = *this;
  for (Elem& x : out.data_) x = field_.mul(s, x);
  return out;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw BadInput("block outside matrix bounds");
  Matrix out(field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
  return out;
}

Matrix Matrix::select(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const {
  Matrix out(field_, row_idx.size(), col_idx.size());
  for (std::size_t i = 0; i < row_idx.size(); ++i)
    for (std::size_t j = 0; j < col_idx.size(); ++j) out(i, j) = (*this)(row_idx[i], col_idx[j]);
  return out;
}

void require_same_field(const Matrix& a, const Matrix& b, const char* what) {
  if (!(a.field() == b.field())) throw BadInput(std::string(what) + ": operands over different fields");
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "matrix product");
  if (a.cols_ != b.rows_) throw BadInput("matrix product: inner dimensions differ");
  const Field& f = a.field_;
  Matrix out(f, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Elem aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) = f.add(out(i, j), f.mul(aik, b(k, j)));
    }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "matrix sum");
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw BadInput("matrix sum: shapes differ");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = a.field_.add(a.data_[i], b.data_[i]);
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "matrix difference");
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw BadInput("matrix difference: shapes differ");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = a.field_.sub(a.data_[i], b.data_[i]);
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Elem x) { return x.is_zero(); });
}

bool Matrix::is_identity() const { return is_square() && *this == identity(field_, rows_); }

bool Matrix::is_diagonal() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && !(*this)(i, j).is_zero()) return false;
  return true;
}

bool Matrix::is_toeplitz() const {
  if (!is_square()) return false;
  for (std::size_t i = 1; i < rows_; ++i)
    for (std::size_t j = 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(i - 1, j - 1)) return false;
  return true;
}

bool Matrix::is_monomial() const {
  if (!is_square()) return false;
  std::vector<int> col_count(cols_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    int row_count = 0;
    for (std::size_t j = 0; j < cols_; ++j)
      if (!(*this)(i, j).is_zero()) {
        ++row_count;
        ++col_count[j];
      }
    if (row_count != 1) return false;
  }
  return std::all_of(col_count.begin(), col_count.end(), [](int c) { return c == 1; });
}

bool Matrix::is_permutation() const {
  return is_monomial() && std::all_of(data_.begin(), data_.end(), [](Elem x) { return x.rep <= 1; });
}

bool Matrix::is_unit_lower_triangular() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    if ((*this)(i, i) != field_.one()) return false;
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (!(*this)(i, j).is_zero()) return false;
  }
  return true;
}

bool Matrix::in_subfield(unsigned g) const {
  return std::all_of(data_.begin(), data_.end(), [&](Elem x) { return field_.in_subfield(x, g); });
}

Vec Matrix::diagonal_entries() const {
  Vec out(std::min(rows_, cols_));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (*this)(i, i);
  return out;
}

Matrix vstack(const Matrix& top, const Matrix& bottom) {
  require_same_field(top, bottom, "vstack");
  if (top.rows() == 0) return bottom;
  if (bottom.rows() == 0) return top;
  if (top.cols() != bottom.cols()) throw BadInput("vstack: column counts differ");
  std::vector<Elem> data = top.entries();
  data.insert(data.end(), bottom.entries().begin(), bottom.entries().end());
  return Matrix(top.field(), top.rows() + bottom.rows(), top.cols(), std::move(data));
}

Matrix hstack(const Matrix& left, const Matrix& right) {
  require_same_field(left, right, "hstack");
  if (left.rows() != right.rows()) throw BadInput("hstack: row counts differ");
  Matrix out(left.field(), left.rows(), left.cols() + right.cols());
  for (std::size_t i = 0; i < left.rows(); ++i) {
    for (std::size_t j = 0; j < left.cols(); ++j) out(i, j) = left(i, j);
    for (std::size_t j = 0; j < right.cols(); ++j) out(i, left.cols() + j) = right(i, j);
  }
  return out;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "kronecker");
  const Field& f = a.field();
  Matrix out(f, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Elem aij = a(i, j);
      if (aij.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = f.mul(aij, b(k, l));
    }
  return out;
}

Elem det(const Matrix& a) {
  if (!a.is_square()) throw BadInput("determinant of a non-square matrix");
  const Field& f = a.field();
  const std::size_t n = a.rows();
  Matrix m = a;
  Elem d = f.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m(piv, c).is_zero()) ++piv;
    if (piv == n) return f.zero();
    if (piv != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(m(piv, j), m(c, j));
      d = f.neg(d);
    }
    const Elem pc = m(c, c);
    d = f.mul(d, pc);
    const Elem ip = f.inv(pc);
    for (std::size_t r = c + 1; r < n; ++r) {
      const Elem factor = f.mul(m(r, c), ip);
      if (factor.is_zero()) continue;
      for (std::size_t j = c; j < n; ++j) m(r, j) = f.sub(m(r, j), f.mul(factor, m(c, j)));
    }
  }
  return d;
}

Rref rref(const Matrix& a) {
  const Field& f = a.field();
  Matrix m = a;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    const Elem ip = f.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(ip, m(r, j));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      const Elem factor = m(i, c);
      if (factor.is_zero()) continue;
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return {m.block(0, 0, r, m.cols()), std::move(pivots)};
}

std::size_t rank(const Matrix& a) { return rref(a).pivots.size(); }

Matrix inverse(const Matrix& a) {
  if (!a.is_square()) throw BadInput("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  const Rref r = rref(hstack(a, Matrix::identity(a.field(), n)));
  if (r.pivots.size() < n || r.pivots[n - 1] != n - 1) throw BadInput("inverse of a singular matrix");
  return r.reduced.block(0, n, n, n);
}

Matrix right_nullspace(const Matrix& a) {
  const Field& f = a.field();
  const Rref r = rref(a);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : r.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix basis(f, n, free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t fc = free_cols[k];
    basis(fc, k) = f.one();
    for (std::size_t i = 0; i < r.pivots.size(); ++i) basis(r.pivots[i], k) = f.neg(r.reduced(i, fc));
  }
  return basis;
}

MonomialDecomposition monomial_decompose(const Matrix& m) {
  if (!m.is_monomial()) throw BadInput("matrix is not monomial");
  const std::size_t n = m.rows();
  Matrix d(m.field(), n, n);
  Matrix p(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!m(i, j).is_zero()) {
        d(i, i) = m(i, j);
        p(i, j) = m.field().one();
      }
  return {std::move(d), std::move(p)};
}

Vec vec_mul(const Field& f, std::span<const Elem> v, const Matrix& m) {
  if (v.size() != m.rows()) throw BadInput("vector length does not match matrix rows");
  Vec out(m.cols(), Elem{0});
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] = f.add(out[j], f.mul(v[i], m(i, j)));
  }
  return out;
}

Elem dot(const Field& f, std::span<const Elem> u, std::span<const Elem> v) {
  if (u.size() != v.size()) throw BadInput("dot product of vectors of different lengths");
  Elem acc{0};
  for (std::size_t i = 0; i < u.size(); ++i) acc = f.add(acc, f.mul(u[i], v[i]));
  return acc;
}

Vec frobenius(const Field& f, std::span<const Elem> v, unsigned e) {
  Vec out(v.begin(), v.end());
  for (Elem& x : out) x = f.frobenius(x, e);
  return out;
}

std::size_t hamming_weight(std::span<const Elem> v) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Elem x) { return !x.is_zero(); }));
}

}  // namespace sigmamp
