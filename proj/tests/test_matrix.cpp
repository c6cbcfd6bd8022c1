// Copyright 2026 The sigmamp Authors
// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"
#include "oracles.hpp"
#include "sigmamp/error.hpp"
#include "sigmamp/matrix.hpp"

using namespace sigmamp;

TEST_CASE("det agrees with Leibniz expansion") {
  std::mt19937_64 rng(11);
  for (auto [p, h] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {3, 2}, {2, 3}, {3, 4}}) {
    const Field f = Field::make(p, h);
    for (int t = 0; t < 60; ++t) {
      const std::size_t n = 1 + t % 5;
      Matrix a = oracle::random_matrix(f, n, n, rng);
      if (t % 4 == 0 && n > 1) {  // force a singular case now and then
        for (std::size_t j = 0; j < n; ++j) a(n - 1, j) = a(0, j);
      }
      CHECK(det(a) == oracle::leibniz_det(a));
    }
  }
}

TEST_CASE("inverse, rank and nullspace") {
  std::mt19937_64 rng(12);
  const Field f = Field::make(3, 2);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + t % 5;
    const Matrix a = oracle::random_invertible(f, n, rng);
    const Matrix ai = inverse(a);
    CHECK((a * ai).is_identity());
    CHECK((ai * a).is_identity());
    CHECK(rank(a) == n);
    const Matrix b = oracle::random_matrix(f, 3, 6, rng);
    const Matrix ns = right_nullspace(b);
    CHECK(ns.rows() == 6);
    CHECK(ns.cols() == 6 - rank(b));
    CHECK((b * ns).is_zero());
    CHECK(rank(ns) == ns.cols());
  }
  Matrix z(f, 2, 2);
  CHECK_THROWS_AS(inverse(z), BadInput);
}

TEST_CASE("rref spans the same row space") {
  std::mt19937_64 rng(13);
  const Field f = Field::make(2, 2);
  for (int t = 0; t < 30; ++t) {
    const Matrix a = oracle::random_matrix(f, 3, 5, rng);
    const Rref r = rref(a);
    CHECK(oracle::span(r.reduced) == oracle::span(a));
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
      CHECK(r.reduced(i, r.pivots[i]) == f.one());
      for (std::size_t k = 0; k < r.reduced.rows(); ++k)
        if (k != i) CHECK(r.reduced(k, r.pivots[i]).is_zero());
    }
  }
}

TEST_CASE("structured constructors") {
  const Field f = Field::make(2, 3);
  const Vec row{f.omega_pow(0), f.omega_pow(1), f.omega_pow(2)};
  const Vec col{f.omega_pow(0), f.omega_pow(3), f.omega_pow(4)};
  const Matrix t = Matrix::toeplitz(f, row, col);
  CHECK(t.is_toeplitz());
  CHECK(t(0, 2) == f.omega_pow(2));
  CHECK(t(2, 0) == f.omega_pow(4));
  CHECK(t(2, 1) == f.omega_pow(3));
  CHECK_THROWS_AS(Matrix::toeplitz(f, row, Vec{f.omega(), f.one(), f.one()}), BadInput);

  const Matrix q = Matrix::anti_identity(f, 3);
  CHECK((q * q).is_identity());
  CHECK(q.is_permutation());
  const std::size_t perm[] = {2, 0, 1};
  const Matrix p = Matrix::permutation(f, perm);
  CHECK(p(0, 2) == f.one());
  CHECK(p.is_permutation());
  CHECK((p * p.transpose()).is_identity());
  const Matrix d = Matrix::diagonal(f, row);
  CHECK(d.is_diagonal());
  CHECK(d.diagonal_entries() == row);
  CHECK(Matrix::anti_diagonal(f, row)(2, 0) == f.omega_pow(2));
}

TEST_CASE("Toeplitz identity A = Q A^T Q") {
  std::mt19937_64 rng(14);
  const Field f = Field::make(3, 4);
  for (int t = 0; t < 50; ++t) {
    const std::size_t s = 1 + t % 5;
    const Matrix a = oracle::random_toeplitz(f, s, rng);
    const Matrix q = Matrix::anti_identity(f, s);
    CHECK(a == q * a.transpose() * q);
  }
}

TEST_CASE("monomial decomposition") {
  std::mt19937_64 rng(15);
  const Field f = Field::make(2, 2);
  for (int t = 0; t < 30; ++t) {
    const Matrix m = oracle::random_monomial(f, 4, rng);
    CHECK(m.is_monomial());
    const MonomialDecomposition d = monomial_decompose(m);
    CHECK(d.diag.is_diagonal());
    CHECK(d.perm.is_permutation());
    CHECK(d.diag * d.perm == m);
  }
  CHECK_THROWS_AS(monomial_decompose(Matrix::from_rows(f, {{f.one(), f.one()}, {f.zero(), f.one()}})), BadInput);
}

TEST_CASE("Frobenius of a product") {
  std::mt19937_64 rng(16);
  const Field f = Field::make(3, 4);
  const Matrix a = oracle::random_matrix(f, 3, 4, rng), b = oracle::random_matrix(f, 4, 2, rng);
  for (unsigned e = 0; e < 4; ++e) CHECK((a * b).frobenius(e) == a.frobenius(e) * b.frobenius(e));
}

TEST_CASE("Kronecker, stacking and blocks") {
  std::mt19937_64 rng(17);
  const Field f = Field::make(5, 1);
  const Matrix a = oracle::random_matrix(f, 2, 3, rng), b = oracle::random_matrix(f, 2, 2, rng);
  const Matrix k = kronecker(a, b);
  CHECK(k.rows() == 4);
  CHECK(k.cols() == 6);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(k.block(2 * i, 2 * j, 2, 2) == b.scaled(a(i, j)));
  const Matrix c = oracle::random_matrix(f, 2, 2, rng), d = oracle::random_matrix(f, 2, 2, rng);
  CHECK(kronecker(a.transpose(), b) * kronecker(c, d) == kronecker(a.transpose() * c, b * d));
  const Matrix v = vstack(a, a);
  CHECK(v.block(2, 0, 2, 3) == a);
  CHECK(hstack(a, a).block(0, 3, 2, 3) == a);
  CHECK(vstack(Matrix(f, 0, 3), a) == a);
  CHECK_THROWS_AS(a * a, BadInput);
}

TEST_CASE("vector helpers") {
  const Field f = Field::make(3, 1);
  const Vec u{f.one(), f.constant(2), f.zero()};
  CHECK(hamming_weight(u) == 2);
  CHECK(dot(f, u, u) == f.constant(2));  // 1 + 4 = 5 = 2 mod 3
  const Matrix m = Matrix::identity(f, 3);
  CHECK(vec_mul(f, u, m) == u);
}

TEST_CASE("mixing fields is rejected") {
  const Field f = Field::make(2, 2), g = Field::make(3, 1);
  CHECK_THROWS_AS(Matrix::identity(f, 2) * Matrix::identity(g, 2), BadInput);
}
