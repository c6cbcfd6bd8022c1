// Copyright 2026 The sigmamp Authors
// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"
#include "oracles.hpp"
#include "sigmamp/codes.hpp"
#include "sigmamp/error.hpp"
#include "sigmamp/isometry.hpp"

using namespace sigmamp;

namespace {

Vec random_vec(const Field& f, std::size_t n, std::mt19937_64& rng) {
  Vec v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(oracle::random_elem(f, rng));
  return v;
}

}  // namespace

TEST_CASE("apply matches the entrywise definition and is invertible") {
  std::mt19937_64 rng(31);
  const Field f = Field::make(3, 4);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + t % 6;
    const Isometry s(oracle::random_monomial(f, n, rng), static_cast<unsigned>(t % 4));
    const Vec v = random_vec(f, n, rng);
    CHECK(s.apply(v) == oracle::apply(s, v));
    CHECK(s.apply_inverse(s.apply(v)) == v);
    CHECK(hamming_weight(s.apply(v)) == hamming_weight(v));
    Matrix g(f, 1, n);
    for (std::size_t j = 0; j < n; ++j) g(0, j) = v[j];
    const Matrix rows = s.apply_rows(g);
    CHECK(Vec(rows.row(0).begin(), rows.row(0).end()) == s.apply(v));
  }
}

TEST_CASE("inner product is linear on the left and pi_e-semilinear on the right") {
  std::mt19937_64 rng(32);
  const Field f = Field::make(2, 4);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 4;
    const unsigned e = static_cast<unsigned>(t % 4);
    const Isometry s(oracle::random_monomial(f, n, rng), e);
    const Vec u = random_vec(f, n, rng), v = random_vec(f, n, rng), w = random_vec(f, n, rng);
    const Elem a = oracle::random_elem(f, rng);
    Vec au, av, vw;
    for (std::size_t i = 0; i < n; ++i) {
      au.push_back(f.mul(a, u[i]));
      av.push_back(f.mul(a, v[i]));
      vw.push_back(f.add(v[i], w[i]));
    }
    CHECK(s.inner(au, v) == f.mul(a, s.inner(u, v)));
    CHECK(s.inner(u, av) == f.mul(f.frobenius(a, e), s.inner(u, v)));
    CHECK(s.inner(u, vw) == f.add(s.inner(u, v), s.inner(u, w)));
  }
}

TEST_CASE("named isometries") {
  const Field f4 = Field::make(2, 2);
  CHECK(Isometry::hermitian(f4, 3) == Isometry(Matrix::identity(f4, 3), 1));
  CHECK(Isometry::euclidean(f4, 3).e() == 0);
  CHECK_THROWS_AS(Isometry::hermitian(Field::make(2, 3), 2), BadInput);

  // Galois duals are {v : sum c_i v_i^(p^e) = 0}.
  std::mt19937_64 rng(33);
  const Field f = Field::make(2, 3);
  for (unsigned e = 0; e < 3; ++e) {
    const LinearCode c = oracle::random_code(f, 3, 1, rng);
    const Vec g(c.generator().row(0).begin(), c.generator().row(0).end());
    oracle::WordSet expected;
    oracle::for_each_vector(f, 3, [&](const std::vector<Elem>& v) {
      Elem acc = f.zero();
      for (std::size_t i = 0; i < 3; ++i) acc = f.add(acc, f.mul(g[i], f.frobenius(v[i], e)));
      if (acc.is_zero()) expected.insert(oracle::to_word(v));
    });
    CHECK(oracle::code_words(sigma_dual(c, Isometry::galois(f, 3, e))) == expected);
  }

  // The symplectic form is alternating.
  const Field f9 = Field::make(3, 2);
  const Isometry sp = Isometry::symplectic(f9, 6);
  for (int t = 0; t < 30; ++t) {
    const Vec u = random_vec(f9, 6, rng), v = random_vec(f9, 6, rng);
    CHECK(sp.inner(u, u).is_zero());
    CHECK(sp.inner(u, v) == f9.neg(sp.inner(v, u)));
  }
  CHECK_THROWS_AS(Isometry::symplectic(f9, 3), BadInput);
}

TEST_CASE("pairing gives biduality") {
  std::mt19937_64 rng(34);
  for (auto [p, h] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 2}, {3, 2}, {2, 3}}) {
    const Field f = Field::make(p, h);
    for (int t = 0; t < 30; ++t) {
      const std::size_t n = 2 + t % 3;
      const Isometry sp(oracle::random_monomial(f, n, rng), static_cast<unsigned>(t % h));
      const Elem scalar = oracle::random_nonzero(f, rng);
      const Isometry s = sp.paired(scalar);
      CHECK(s.e() == (h - sp.e()) % h);
      CHECK(s.m_tau() == sp.m_tau().frobenius(s.e()).transpose().scaled(f.inv(scalar)));
      const LinearCode c = oracle::random_code(f, n, t % (n + 1), rng);
      CHECK(sigma_dual(sigma_dual(c, sp), s) == c);
      // Brute-force check of the same statement.
      const LinearCode d = sigma_dual(c, sp);
      CHECK(oracle::code_words(d) == oracle::sigma_dual(c.dimension() ? c.generator() : Matrix(f, 0, n), sp));
    }
  }
  const Field f = Field::make(2, 2);
  CHECK_THROWS_AS(Isometry::euclidean(f, 2).paired(f.zero()), BadInput);
}

TEST_CASE("Kronecker isometries flatten to a Kronecker product") {
  std::mt19937_64 rng(35);
  const Field f = Field::make(3, 2);
  const Matrix outer = oracle::random_monomial(f, 3, rng);
  const Isometry inner(oracle::random_monomial(f, 2, rng), 1);
  const KronIsometry k(outer, inner);
  const Isometry flat = k.flatten();
  CHECK(flat.m_tau() == kronecker(outer, inner.m_tau()));
  CHECK(flat.e() == 1);
  // Block j of sigma(c) is sum_l outer(l, j) sigma'(c_l).
  const Vec c = random_vec(f, 6, rng);
  const Vec img = flat.apply(c);
  for (std::size_t j = 0; j < 3; ++j) {
    Vec expect(2, f.zero());
    for (std::size_t l = 0; l < 3; ++l) {
      const Vec part = inner.apply(std::span<const Elem>(c).subspan(2 * l, 2));
      for (std::size_t t = 0; t < 2; ++t) expect[t] = f.add(expect[t], f.mul(outer(l, j), part[t]));
    }
    CHECK(Vec(img.begin() + 2 * j, img.begin() + 2 * j + 2) == expect);
  }
}

TEST_CASE("isometry arguments are validated") {
  const Field f = Field::make(2, 2);
  CHECK_THROWS_AS(Isometry(Matrix::from_rows(f, {{f.one(), f.one()}, {f.zero(), f.one()}}), 0), BadInput);
  CHECK_THROWS_AS(Isometry(Matrix::identity(f, 2), 2), BadInput);
  CHECK_THROWS_AS(Isometry::euclidean(f, 2).apply(Vec{f.one()}), BadInput);
}
