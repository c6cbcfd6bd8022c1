// Copyright 2026 The sigmamp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sigmamp/gf.hpp"

namespace sigmamp {

using Vec = std::vector<Elem>;

/// Dense row-major matrix over one Field.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);
  Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Elem> entries);

  static Matrix from_rows(const Field& field, const std::vector<Vec>& rows);
  static Matrix identity(const Field& field, std::size_t n);
  static Matrix diagonal(const Field& field, std::span<const Elem> diag);
  /// Q = adiag(1, ..., 1).
  static Matrix anti_identity(const Field& field, std::size_t n);
  static Matrix anti_diagonal(const Field& field, std::span<const Elem> adiag);
  /// Row i has its 1 in column perm[i].
  static Matrix permutation(const Field& field, std::span<const std::size_t> perm);
  /// T[i][j] = first_row[j - i] for j >= i, first_col[i - j] otherwise.
  static Matrix toeplitz(const Field& field, std::span<const Elem> first_row, std::span<const Elem> first_col);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Elem operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Elem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::span<const Elem> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<Elem> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  Vec col(std::size_t j) const;
  const std::vector<Elem>& entries() const { return data_; }

  Matrix transpose() const;
  Matrix frobenius(unsigned e) const;
  Matrix scaled(Elem s) const;
  /// Rows [r0, r0 + nr) and columns [c0, c0 + nc).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  Matrix select(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const;
  Matrix leading(std::size_t k) const { return block(0, 0, k, k); }

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  bool is_zero() const;
  bool is_identity() const;
  bool is_diagonal() const;
  bool is_toeplitz() const;
  /// Exactly one nonzero entry in every row and every column.
  bool is_monomial() const;
  bool is_permutation() const;
  bool is_unit_lower_triangular() const;
  /// All entries in the subfield F_{p^g}.
  bool in_subfield(unsigned g) const;

  Vec diagonal_entries() const;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

struct MonomialDecomposition {
  Matrix diag;
  Matrix perm;
};

struct Rref {
  Matrix reduced;  // rank x cols, zero rows dropped
  std::vector<std::size_t> pivots;
};

Matrix vstack(const Matrix& top, const Matrix& bottom);
Matrix hstack(const Matrix& left, const Matrix& right);
Matrix kronecker(const Matrix& a, const Matrix& b);

Elem det(const Matrix& a);
Matrix inverse(const Matrix& a);
Rref rref(const Matrix& a);
std::size_t rank(const Matrix& a);
/// Columns form a basis of {x : A x = 0}.
Matrix right_nullspace(const Matrix& a);
/// M = D P with D diagonal (nonzero) and P a permutation matrix.
MonomialDecomposition monomial_decompose(const Matrix& m);

/// Row vector times matrix.
Vec vec_mul(const Field& f, std::span<const Elem> v, const Matrix& m);
Elem dot(const Field& f, std::span<const Elem> u, std::span<const Elem> v);
Vec frobenius(const Field& f, std::span<const Elem> v, unsigned e);
std::size_t hamming_weight(std::span<const Elem> v);

void require_same_field(const Matrix& a, const Matrix& b, const char* what);

}  // namespace sigmamp
