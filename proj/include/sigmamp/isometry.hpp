// Copyright 2026 The sigmamp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>

#include "sigmamp/matrix.hpp"

namespace sigmamp {

/// Semilinear isometry v -> pi_e(v) M_tau with M_tau monomial.
class Isometry {
 public:
  Isometry(Matrix m_tau, unsigned e);

  static Isometry euclidean(const Field& f, std::size_t n);
  static Isometry hermitian(const Field& f, std::size_t n);
  /// Galois inner product <u,v>_e = sum u_i v_i^{p^(h-e)}: stored Frobenius exponent is h - e mod h.
  static Isometry galois(const Field& f, std::size_t n, unsigned e);
  /// [[O, -I], [I, O]] on F^{2n}; `len` must be even.
  static Isometry symplectic(const Field& f, std::size_t len);

  const Matrix& m_tau() const { return m_tau_; }
  unsigned e() const { return e_; }
  std::size_t length() const { return m_tau_.rows(); }
  const Field& field() const { return m_tau_.field(); }

  Vec apply(std::span<const Elem> v) const;
  Vec apply_inverse(std::span<const Elem> v) const;
  /// Image of every row: pi_e(G) M_tau.
  Matrix apply_rows(const Matrix& g) const;

  /// <u, v>_sigma = u . apply(v)^T.
  Elem inner(std::span<const Elem> u, std::span<const Elem> v) const;

  /// The isometry sigma with e = h - e' and M_tau = t^{-1} pi_{h-e'}(M_tau')^T,
  /// for which (C^{perp sigma'})^{perp sigma} = C.
  Isometry paired(Elem t) const;

  friend bool operator==(const Isometry& a, const Isometry& b) {
    return a.e_ == b.e_ && a.m_tau_ == b.m_tau_;
  }

 private:
  Matrix m_tau_;
  unsigned e_;
};

/// sigma = sigma_hat (x) sigma' with outer factor M_tau_hat (s x s) and inner isometry of length n.
struct KronIsometry {
  Matrix outer;
  Isometry inner;

  KronIsometry(Matrix outer_factor, Isometry inner_iso);
  Isometry flatten() const;
};

}  // namespace sigmamp
