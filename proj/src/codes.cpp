// Copyright 2026 The sigmamp Authors
// SPDX-License-Identifier: Apache-2.0

#include "sigmamp/codes.hpp"

#include "sigmamp/error.hpp"

namespace sigmamp {

LinearCode::LinearCode(Field field, std::size_t n) : gen_(std::move(field), 0, n) {}

LinearCode LinearCode::from_generator(const Matrix& g) { return LinearCode(rref(g)); }

bool LinearCode::contains(std::span<const Elem> v) const {
  if (v.size() != length()) throw BadInput("vector length does not match code length");
  const Field& f = field();
  Vec r(v.begin(), v.end());
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Elem c = r[pivots_[i]];
    if (c.is_zero()) continue;
    const auto row = gen_.row(i);
    for (std::size_t j = 0; j < r.size(); ++j) r[j] = f.sub(r[j], f.mul(c, row[j]));
  }
  return hamming_weight(r) == 0;
}

bool LinearCode::contains(const LinearCode& other) const {
  require_same_field(gen_, other.gen_, "code containment");
  if (other.length() != length()) throw BadInput("code containment: lengths differ");
  for (std::size_t i = 0; i < other.dimension(); ++i)
    if (!contains(other.gen_.row(i))) return false;
  return true;
}

LinearCode transform(const LinearCode& c, const Matrix& m) {
  return LinearCode::from_generator(c.generator() * m);
}

LinearCode image(const LinearCode& c, const Isometry& sigma) {
  return LinearCode::from_generator(sigma.apply_rows(c.generator()));
}

LinearCode euclidean_dual(const LinearCode& c) {
  return LinearCode::from_generator(right_nullspace(c.generator()).transpose());
}

LinearCode sigma_dual(const LinearCode& c, const Isometry& sigma) {
  if (sigma.length() != c.length()) throw BadInput("isometry length does not match code length");
  return euclidean_dual(image(c, sigma));
}

bool sigma_euclidean_identity_holds(const LinearCode& c, const Isometry& sigma) {
  const Matrix& m = sigma.m_tau();
  const LinearCode lhs = sigma_dual(c, sigma);
  const LinearCode rhs = transform(image(euclidean_dual(c), sigma), inverse(m.transpose() * m));
  return lhs == rhs;
}

// <u, v>_sigma is linear in u and pi_e-semilinear in v, so it vanishes on all
// of C x C exactly when it vanishes on every pair of generator rows.
bool is_self_orthogonal(const LinearCode& c, const Isometry& sigma) {
  if (sigma.length() != c.length()) throw BadInput("isometry length does not match code length");
  const Matrix& g = c.generator();
  const Matrix gram = g * sigma.apply_rows(g).transpose();
  return gram.is_zero();
}

bool is_dual_containing(const LinearCode& c, const Isometry& sigma) {
  return c.contains(sigma_dual(c, sigma));
}

LinearCode intersect(const LinearCode& a, const LinearCode& b) {
  return euclidean_dual(sum(euclidean_dual(a), euclidean_dual(b)));
}

LinearCode sum(const LinearCode& a, const LinearCode& b) {
  if (a.length() != b.length()) throw BadInput("code sum: lengths differ");
  return LinearCode::from_generator(vstack(a.generator(), b.generator()));
}

}  // namespace sigmamp
