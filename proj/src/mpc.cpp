// Copyright 2026 The sigmamp Authors
// SPDX-License-Identifier: Apache-2.0

#include "sigmamp/mpc.hpp"

#include <algorithm>

#include "sigmamp/error.hpp"
#include "sigmamp/nsc.hpp"

namespace sigmamp {

std::size_t sat_mul(std::size_t a, std::size_t b) {
  if (a == kUnbounded || b == kUnbounded) return kUnbounded;
  if (a != 0 && b > kUnbounded / a) return kUnbounded;
  return a * b;
}

MatrixProductCode mp_build(std::vector<LinearCode> codes, Matrix a) {
  if (codes.empty()) throw BadInput("matrix-product code needs at least one input code");
  const std::size_t s = codes.size();
  if (a.rows() != s || a.cols() != s) throw BadInput("defining matrix must be s x s for s input codes");
  const Field& f = a.field();
  const std::size_t n = codes.front().length();
  for (const LinearCode& c : codes) {
    if (!(c.field() == f)) throw BadInput("input codes and defining matrix over different fields");
    if (c.length() != n) throw BadInput("input codes have different lengths");
  }
  Matrix stacked(f, 0, s * n);
  for (std::size_t i = 0; i < s; ++i) {
    Matrix block_row(f, codes[i].dimension(), 0);
    for (std::size_t j = 0; j < s; ++j) block_row = hstack(block_row, codes[i].generator().scaled(a(i, j)));
    stacked = vstack(stacked, block_row);
  }
  LinearCode derived = LinearCode::from_generator(stacked);
  return {std::move(codes), std::move(a), std::move(derived)};
}

std::vector<std::size_t> row_distance_profile(const Matrix& a, const EnumerationOptions& opts) {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i <= a.rows(); ++i)
    out.push_back(min_distance(LinearCode::from_generator(a.block(0, 0, i, a.cols())), opts).d);
  return out;
}

MpBounds mp_bounds(const std::vector<std::size_t>& d, const std::vector<std::size_t>& d_dual,
                   const std::vector<std::size_t>& k, const Matrix& a, const EnumerationOptions& opts) {
  const std::size_t s = a.rows();
  if (!a.is_square() || d.size() != s || d_dual.size() != s || k.size() != s)
    throw BadInput("bounds need s distances, s dual distances and s dimensions for an s x s matrix");
  MpBounds b;
  b.di_profile = row_distance_profile(a, opts);
  for (std::size_t i = 0; i < s; ++i) b.d_general = std::min(b.d_general, sat_mul(b.di_profile[i], d[i]));
  if (!det(a).is_zero()) {
    std::size_t dim = 0;
    for (std::size_t x : k) dim += x;
    b.dimension = dim;
  }
  if (is_nsc(a)) {
    std::size_t dn = kUnbounded, dd = kUnbounded;
    for (std::size_t i = 0; i < s; ++i) {
      dn = std::min(dn, sat_mul(s - i, d[i]));
      dd = std::min(dd, sat_mul(i + 1, d_dual[i]));
    }
    b.d_nsc = dn;
    b.d_dual_nsc = dd;
  }
  return b;
}

MpBounds mp_bounds(const std::vector<LinearCode>& codes, const Matrix& a, const EnumerationOptions& opts) {
  std::vector<std::size_t> d, dd, k;
  for (const LinearCode& c : codes) {
    d.push_back(min_distance(c, opts).d);
    dd.push_back(min_distance(euclidean_dual(c), opts).d);
    k.push_back(c.dimension());
  }
  return mp_bounds(d, dd, k, a, opts);
}

MatrixProductCode mp_euclidean_dual(const MatrixProductCode& mp) {
  if (det(mp.defining).is_zero()) throw BadInput("Euclidean dual formula needs a non-singular defining matrix");
  std::vector<LinearCode> duals;
  for (const LinearCode& c : mp.inputs) duals.push_back(euclidean_dual(c));
  return mp_build(std::move(duals), inverse(mp.defining).transpose());
}

namespace {

void check_kron(const MatrixProductCode& mp, const KronIsometry& ks) {
  if (ks.outer.rows() != mp.blocks()) throw BadInput("outer isometry factor must be s x s");
  if (ks.inner.length() != mp.block_length()) throw BadInput("inner isometry length must equal block length");
}

}  // namespace

MatrixProductCode mp_sigma_dual(const MatrixProductCode& mp, const KronIsometry& ks) {
  check_kron(mp, ks);
  const Matrix core = ks.outer.transpose() * mp.defining.frobenius(ks.inner.e()).transpose();
  if (det(core).is_zero()) throw BadInput("sigma dual formula needs a non-singular defining matrix");
  std::vector<LinearCode> duals;
  for (const LinearCode& c : mp.inputs) duals.push_back(sigma_dual(c, ks.inner));
  return mp_build(std::move(duals), inverse(core));
}

MatrixProductCode mp_sigma_hull(const MatrixProductCode& mp, const KronIsometry& ks) {
  check_kron(mp, ks);
  const Matrix& a = mp.defining;
  const Matrix prod = a * ks.outer.transpose() * a.frobenius(ks.inner.e()).transpose();
  if (!prod.is_diagonal()) throw BadInput("hull formula needs A M_hat^T pi_e(A)^T to be diagonal");
  std::vector<LinearCode> parts;
  for (std::size_t i = 0; i < mp.blocks(); ++i) {
    const LinearCode& c = mp.inputs[i];
    parts.push_back(prod(i, i).is_zero() ? c : intersect(c, sigma_dual(c, ks.inner)));
  }
  return mp_build(std::move(parts), a);
}

}  // namespace sigmamp
