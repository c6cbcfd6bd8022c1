// Copyright 2026 The sigmamp Authors
// SPDX-License-Identifier: Apache-2.0

#include <set>
#include <string>

#include "doctest.h"
#include "oracles.hpp"
#include "sigmamp/error.hpp"
#include "sigmamp/nsc.hpp"
#include "sigmamp/quasi.hpp"

using namespace sigmamp;

namespace {

Matrix subfield_matrix(const Field& f, std::size_t s, unsigned g, std::mt19937_64& rng, bool monomial) {
  const auto pool = f.subfield_elements(g);
  auto draw = [&](bool nonzero) {
    for (;;) {
      const Elem x = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
      if (!nonzero || !x.is_zero()) return x;
    }
  };
  if (monomial) {
    const Matrix p = oracle::random_monomial(f, s, rng);
    Matrix m(f, s, s);
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < s; ++j)
        if (!p(i, j).is_zero()) m(i, j) = draw(true);
    return m;
  }
  Matrix m(f, s, s);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) m(i, j) = draw(false);
  return m;
}

}  // namespace

TEST_CASE("lift reproduces the F_81 worked example") {
  const Field f = Field::make(3, 4);
  auto w = [&](int k) { return f.omega_pow(k); };
  const Elem z = f.zero(), o = f.one(), two = f.constant(2);
  const Matrix a = Matrix::from_rows(f, {{w(10), w(50), w(20)}, {w(30), w(10), w(50)}, {w(0), w(30), w(10)}});
  const Matrix mt = Matrix::from_rows(f, {{z, w(10), z}, {two, z, z}, {z, z, w(60)}});
  const QuasiCertificate c = lift_to_quasi(a, mt, 3);
  CHECK(c.lower == Matrix::from_rows(f, {{o, z, z}, {z, o, z}, {o, w(10), o}}));
  CHECK(c.product == Matrix::from_rows(f, {{w(10), w(50), w(20)}, {w(30), w(10), w(50)}, {w(10), w(60), w(10)}}));
  CHECK(c.m_hat == Matrix::diagonal(f, Vec{two, o, o}));
  CHECK(c.diag == Matrix::diagonal(f, Vec{o, two, o}));
  CHECK(c.valid());
  CHECK(is_nsc(c.product));
}

TEST_CASE("lift on random inputs") {
  std::mt19937_64 rng(71);
  struct Case {
    std::uint32_t p;
    unsigned h, e;
  };
  for (const Case& k : std::vector<Case>{{3, 2, 1}, {2, 2, 1}, {2, 2, 0}, {3, 4, 3}, {3, 4, 1}, {2, 4, 2}, {5, 2, 1}}) {
    const Field f = Field::make(k.p, k.h);
    const unsigned g = GaloisParams::from(k.e, k.h).g;
    int ok = 0, refused = 0;
    for (int t = 0; t < 60; ++t) {
      const std::size_t s = 2 + t % 3;
      const Matrix a = subfield_matrix(f, s, g, rng, false);
      const Matrix mt = subfield_matrix(f, s, g, rng, true);
      try {
        const QuasiCertificate c = lift_to_quasi(a, mt, k.e);
        ++ok;
        CHECK(c.valid());
        CHECK(c.lower.is_unit_lower_triangular());
        CHECK(is_quasi_sigma(c.product, c.m_hat, k.e));
        // A unit lower triangular factor keeps the first-ell-row minors.
        CHECK(is_nsc(c.product) == is_nsc(a));
        const MonomialDecomposition d = monomial_decompose(mt);
        CHECK(c.m_hat == d.diag * d.diag.frobenius(k.e));
      } catch (const BadInput& e) {
        ++refused;
        CHECK(std::string(e.what()).find("leading principal minor") != std::string::npos);
      }
    }
    CHECK(ok > 0);
  }
}

TEST_CASE("lift refuses inputs outside the subfield") {
  const Field f = Field::make(3, 4);
  const Matrix a = Matrix::from_rows(f, {{f.omega(), f.one()}, {f.one(), f.omega()}});
  CHECK_THROWS_AS(lift_to_quasi(a, Matrix::identity(f, 2), 3), BadInput);
}

TEST_CASE("quasi-sigma predicate") {
  const Field f = Field::make(2, 2);
  const Matrix id = Matrix::identity(f, 2);
  CHECK(is_quasi_sigma(id, id, 1));
  CHECK_FALSE(is_quasi_sigma(Matrix::from_rows(f, {{f.one(), f.one()}, {f.zero(), f.one()}}), id, 0));
  // Rows (1, 1) and (1, w) are Hermitian-orthogonal only if 1 + w^2 = 0, which fails.
  CHECK_FALSE(is_quasi_sigma(Matrix::from_rows(f, {{f.one(), f.one()}, {f.one(), f.omega()}}), id, 1));
  CHECK_THROWS_AS(is_quasi_sigma(id, Matrix::from_rows(f, {{f.one(), f.one()}, {f.one(), f.one()}}), 0), BadInput);
}

TEST_CASE("seeding") {
  std::set<std::uint64_t> seeds;
  for (std::uint64_t t = 0; t < 1000; ++t) seeds.insert(trial_seed(7, t));
  CHECK(seeds.size() == 1000);
  CHECK(trial_seed(7, 3) == trial_seed(7, 3));
  CHECK(trial_seed(7, 3) != trial_seed(8, 3));
  std::mt19937_64 rng(1);
  std::vector<int> hist(5, 0);
  for (int i = 0; i < 5000; ++i) ++hist[uniform_below(rng, 5)];
  for (int c : hist) CHECK(c > 850);
  CHECK_THROWS_AS(uniform_below(rng, 0), BadInput);
}

TEST_CASE("algorithm 1 is deterministic per seed") {
  const Field f = Field::make(3, 2);
  const Matrix id = Matrix::identity(f, 3);
  int found = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const AlgorithmOneResult a = algorithm1(f, 3, 1, id, seed), b = algorithm1(f, 3, 1, id, seed);
    CHECK(a.candidate == b.candidate);
    CHECK(a.certificate.has_value() == b.certificate.has_value());
    REQUIRE(a.toeplitz);
    CHECK(*a.toeplitz == *b.toeplitz);
    CHECK(a.toeplitz->is_toeplitz());
    CHECK(is_nsc(*a.toeplitz));
    REQUIRE(a.diag);
    CHECK(a.diag->is_diagonal());
    if (a.certificate) {
      ++found;
      CHECK(a.certificate->valid());
      CHECK(is_nsc(a.certificate->product));
      CHECK(std::set<std::string>{"TD", "DT", "RD", "DR"}.count(a.candidate) == 1);
      CHECK(a.certificate->m_hat.is_identity());
    } else {
      CHECK(a.candidate.empty());
    }
  }
  CHECK(found > 20);
}

TEST_CASE("algorithm 1 reports an exhausted NSC retry limit") {
  // Over F_2 no 3 x 3 NSC matrix exists, so every draw is rejected.
  const Field f = Field::make(2, 1);
  CHECK_THROWS_AS(algorithm1(f, 3, 0, Matrix::identity(f, 3), 1, SamplerOptions{50}), BudgetExceeded);
}

TEST_CASE("campaign results do not depend on thread count") {
  const Field f = Field::make(2, 4);
  const Matrix id = Matrix::identity(f, 3);
  const CampaignResult one = sampling_campaign(f, 3, 2, id, 200, 9, 1);
  const CampaignResult many = sampling_campaign(f, 3, 2, id, 200, 9, 4);
  CHECK(one.trials == 200);
  CHECK(one.successes == many.successes);
  REQUIRE(one.records.size() == many.records.size());
  for (std::size_t i = 0; i < one.records.size(); ++i) {
    CHECK(one.records[i].trial == many.records[i].trial);
    CHECK(one.records[i].candidate == many.records[i].candidate);
    CHECK(one.records[i].certificate.product == many.records[i].certificate.product);
    if (i) CHECK(one.records[i - 1].trial < one.records[i].trial);
  }
  CHECK(one.successes == one.records.size());
}

TEST_CASE("tau-OD predicate") {
  const Field f8 = Field::make(2, 3);
  auto w = [&](int k) { return f8.omega_pow(k); };
  const Matrix a = Matrix::from_rows(f8, {{w(0), w(2), w(3)}, {w(3), w(0), w(2)}, {w(2), w(3), w(0)}});
  const TauOdResult r = is_tau_od(a);
  REQUIRE(r.certificate);
  CHECK(r.certificate->d * r.certificate->p == a * a.transpose());
  CHECK(r.certificate->d == Matrix::diagonal(f8, Vec{w(1), w(1), w(1)}));

  const Field f64 = Field::make(2, 6);
  auto v = [&](int k) { return f64.omega_pow(k); };
  const Matrix b = Matrix::from_rows(f64, {{v(0), v(54), v(27)}, {v(36), v(0), v(54)}, {v(54), v(36), v(0)}});
  const TauOdResult rb = is_tau_od(b);
  CHECK_FALSE(rb.certificate);
  CHECK(rb.reason == "A A^T is not monomial");

  const TauOdResult rz = is_tau_od(Matrix(f8, 2, 2));
  CHECK_FALSE(rz.certificate);
  CHECK(rz.reason == "not NSC");
}
