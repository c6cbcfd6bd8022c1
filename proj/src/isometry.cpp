// Copyright 2026 The sigmamp Authors
// SPDX-License-Identifier: Apache-2.0

#include "sigmamp/isometry.hpp"

#include "sigmamp/error.hpp"

namespace sigmamp {

Isometry::Isometry(Matrix m_tau, unsigned e) : m_tau_(std::move(m_tau)), e_(e) {
  if (!m_tau_.is_monomial()) throw BadInput("isometry matrix is not monomial");
  if (e_ >= m_tau_.field().degree()) throw BadInput("Frobenius exponent outside [0, h)");
}

Isometry Isometry::euclidean(const Field& f, std::size_t n) { return Isometry(Matrix::identity(f, n), 0); }

Isometry Isometry::hermitian(const Field& f, std::size_t n) {
  if (f.degree() % 2 != 0) throw BadInput("Hermitian inner product needs an even extension degree");
  return Isometry(Matrix::identity(f, n), f.degree() / 2);
}

Isometry Isometry::galois(const Field& f, std::size_t n, unsigned e) {
  const unsigned h = f.degree();
  if (e >= h) throw BadInput("Galois exponent outside [0, h)");
  return Isometry(Matrix::identity(f, n), (h - e) % h);
}

Isometry Isometry::symplectic(const Field& f, std::size_t len) {
  if (len % 2 != 0) throw BadInput("symplectic length must be even");
  const std::size_t n = len / 2;
  Matrix m(f, len, len);
  const Elem minus_one = f.neg(f.one());
  for (std::size_t i = 0; i < n; ++i) {
    m(i, n + i) = minus_one;
    m(n + i, i) = f.one();
  }
  return Isometry(std::move(m), 0);
}

Vec Isometry::apply(std::span<const Elem> v) const {
  if (v.size() != length()) throw BadInput("vector length does not match isometry");
  return vec_mul(field(), frobenius(field(), v, e_), m_tau_);
}

Vec Isometry::apply_inverse(std::span<const Elem> v) const {
  if (v.size() != length()) throw BadInput("vector length does not match isometry");
  const unsigned h = field().degree();
  const Vec w = vec_mul(field(), v, inverse(m_tau_));
  return frobenius(field(), w, (h - e_) % h);
}

Matrix Isometry::apply_rows(const Matrix& g) const {
  if (g.cols() != length()) throw BadInput("generator length does not match isometry");
  return g.frobenius(e_) * m_tau_;
}

Elem Isometry::inner(std::span<const Elem> u, std::span<const Elem> v) const {
  if (u.size() != length()) throw BadInput("vector length does not match isometry");
  return dot(field(), u, apply(v));
}

Isometry Isometry::paired(Elem t) const {
  if (t.is_zero()) throw BadInput("pairing scalar must be nonzero");
  const Field& f = field();
  const unsigned h = f.degree();
  const unsigned back = (h - e_) % h;
  return Isometry(m_tau_.frobenius(back).transpose().scaled(f.inv(t)), back);
}

KronIsometry::KronIsometry(Matrix outer_factor, Isometry inner_iso)
    : outer(std::move(outer_factor)), inner(std::move(inner_iso)) {
  if (!outer.is_monomial()) throw BadInput("outer isometry factor is not monomial");
  require_same_field(outer, inner.m_tau(), "Kronecker isometry");
}

Isometry KronIsometry::flatten() const { return Isometry(kronecker(outer, inner.m_tau()), inner.e()); }

}  // namespace sigmamp
