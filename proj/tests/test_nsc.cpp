// Copyright 2026 The sigmamp Authors
// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"
#include "oracles.hpp"
#include "sigmamp/error.hpp"
#include "sigmamp/nsc.hpp"

using namespace sigmamp;

namespace {

// NSC s x s matrices need s <= q, so callers keep s small relative to q.
Matrix random_nsc_toeplitz(const Field& f, std::size_t s, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 100000; ++attempt) {
    Matrix t = oracle::random_toeplitz(f, s, rng);
    if (oracle::nsc(t)) return t;
  }
  FAIL("no NSC Toeplitz matrix found");
  return Matrix(f, s, s);
}

}  // namespace

TEST_CASE("check_nsc agrees with the minor-by-minor oracle") {
  std::mt19937_64 rng(21);
  for (auto [p, h] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {3, 2}, {2, 3}}) {
    const Field f = Field::make(p, h);
    int hits = 0;
    for (int t = 0; t < 120; ++t) {
      const std::size_t s = 1 + t % 4;
      const Matrix a = t % 2 ? oracle::random_toeplitz(f, s, rng) : oracle::random_matrix(f, s, s, rng);
      const bool expected = oracle::nsc(a);
      hits += expected;
      const NscReport r = check_nsc(a);
      CHECK(r.nsc == expected);
      CHECK(r.witness.has_value() == !expected);
      if (r.witness) {
        std::vector<std::size_t> rows(r.witness->ell);
        for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
        const Matrix minor = a.select(rows, r.witness->cols);
        CHECK(oracle::leibniz_det(minor).is_zero());
      }
    }
    CHECK(hits > 0);
  }
}

TEST_CASE("witness is the first singular minor in scan order") {
  const Field f = Field::make(2, 1);
  const NscReport zero = check_nsc(Matrix(f, 3, 3));
  REQUIRE(zero.witness);
  CHECK(zero.witness->ell == 1);
  CHECK(zero.witness->cols == std::vector<std::size_t>{0});
  CHECK(zero.minors_evaluated == 1);

  const Matrix ones = Matrix::from_rows(f, {{f.one(), f.one()}, {f.one(), f.one()}});
  const NscReport r = check_nsc(ones);
  REQUIRE(r.witness);
  CHECK(r.witness->ell == 2);
  CHECK(r.witness->cols == std::vector<std::size_t>{0, 1});

  const Matrix second = Matrix::from_rows(f, {{f.one(), f.zero()}, {f.one(), f.one()}});
  REQUIRE(check_nsc(second).witness);
  CHECK(check_nsc(second).witness->cols == std::vector<std::size_t>{1});

  const Field g = Field::make(3, 1);
  const Matrix full = Matrix::from_rows(g, {{g.one(), g.one(), g.one()},
                                           {g.one(), g.constant(2), g.zero()},
                                           {g.one(), g.zero(), g.constant(2)}});
  const NscReport full_r = check_nsc(full);
  CHECK(full_r.nsc == oracle::nsc(full));
  if (full_r.nsc) CHECK(full_r.minors_evaluated == 7);
}

TEST_CASE("leading principal minors") {
  std::mt19937_64 rng(22);
  const Field f = Field::make(3, 2);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 1 + t % 5;
    const Matrix a = oracle::random_matrix(f, n, n, rng);
    const auto m = leading_principal_minors(a);
    REQUIRE(m.size() == n);
    for (std::size_t k = 1; k <= n; ++k) CHECK(m[k - 1] == oracle::leibniz_det(a.leading(k)));
  }
}

TEST_CASE("closure transforms keep NSC") {
  std::mt19937_64 rng(23);
  for (auto [p, h] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 2}, {3, 2}, {2, 3}, {3, 4}}) {
    const Field f = Field::make(p, h);
    for (int t = 0; t < 15; ++t) {
      const std::size_t s = 1 + t % std::min<std::size_t>(5, f.order() - 1);
      const Matrix a = random_nsc_toeplitz(f, s, rng);
      Vec dv;
      for (std::size_t i = 0; i < s; ++i) dv.push_back(oracle::random_nonzero(f, rng));
      const Matrix d = Matrix::diagonal(f, dv);
      CHECK(oracle::nsc(nsc_closure(a, ClosureKind::left_diag, d)));
      CHECK(oracle::nsc(nsc_closure(a, ClosureKind::right_diag, d)));
      CHECK(oracle::nsc(nsc_closure(a, ClosureKind::q_inv_transpose)));
      for (unsigned e = 0; e < h; ++e) {
        const Matrix r = nsc_closure(a, ClosureKind::frobenius_inv_q, std::nullopt, e);
        CHECK(r == inverse(a.frobenius(e)) * Matrix::anti_identity(f, s));
        CHECK(oracle::nsc(r));
      }
    }
  }
}

TEST_CASE("closure argument checks") {
  const Field f = Field::make(2, 2);
  const Matrix a = Matrix::from_rows(f, {{f.one(), f.omega()}, {f.one(), f.omega_pow(2)}});
  REQUIRE(is_nsc(a));
  CHECK_THROWS_AS(nsc_closure(a, ClosureKind::left_diag), BadInput);
  CHECK_THROWS_AS(nsc_closure(a, ClosureKind::right_diag, Matrix::from_rows(f, {{f.one(), f.one()}, {f.zero(), f.one()}})),
                  BadInput);
  CHECK_THROWS_AS(nsc_closure(a, ClosureKind::frobenius_inv_q), BadInput);  // not Toeplitz
  CHECK_THROWS_AS(nsc_closure(Matrix(f, 2, 2), ClosureKind::q_inv_transpose), BadInput);
}

TEST_CASE("published NSC matrices") {
  const Field f = Field::make(3, 4);
  auto w = [&](int k) { return f.omega_pow(k); };
  const Matrix a = Matrix::from_rows(f, {{w(10), w(50), w(20)}, {w(30), w(10), w(50)}, {w(0), w(30), w(10)}});
  CHECK(a.is_toeplitz());
  CHECK(is_nsc(a));
  CHECK(oracle::nsc(a));
  const Field g = Field::make(2, 3);
  const Matrix b = Matrix::from_rows(g, {{g.one(), g.omega_pow(2), g.omega_pow(3)},
                                         {g.omega_pow(3), g.one(), g.omega_pow(2)},
                                         {g.omega_pow(2), g.omega_pow(3), g.one()}});
  CHECK(is_nsc(b));
}
