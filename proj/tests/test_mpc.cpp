// Copyright 2026 The sigmamp Authors
// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"
#include "oracles.hpp"
#include "sigmamp/error.hpp"
#include "sigmamp/mpc.hpp"
#include "sigmamp/nsc.hpp"

using namespace sigmamp;

namespace {

std::vector<LinearCode> random_inputs(const Field& f, std::size_t s, std::size_t n, std::size_t kmax,
                                      std::mt19937_64& rng) {
  std::vector<LinearCode> out;
  for (std::size_t i = 0; i < s; ++i)
    out.push_back(oracle::random_code(f, n, std::uniform_int_distribution<std::size_t>(0, kmax)(rng), rng));
  return out;
}

}  // namespace

TEST_CASE("generator matches the codeword definition") {
  std::mt19937_64 rng(61);
  for (auto [p, h] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 1}, {3, 1}, {2, 2}}) {
    const Field f = Field::make(p, h);
    for (int t = 0; t < 15; ++t) {
      const std::size_t s = 2 + t % 2, n = 3;
      const auto codes = random_inputs(f, s, n, 1, rng);
      const Matrix a = t % 3 ? oracle::random_invertible(f, s, rng) : oracle::random_matrix(f, s, s, rng);
      const MatrixProductCode mp = mp_build(codes, a);
      CHECK(oracle::code_words(mp.derived) == oracle::mp_codewords(codes, a));
      if (!oracle::leibniz_det(a).is_zero()) {
        std::size_t k = 0;
        for (const auto& c : codes) k += c.dimension();
        CHECK(mp.derived.dimension() == k);
      }
    }
  }
}

TEST_CASE("dual formulas equal the nullspace duals") {
  std::mt19937_64 rng(62);
  for (auto [p, h] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {2, 3}, {3, 2}, {3, 4}}) {
    const Field f = Field::make(p, h);
    for (int t = 0; t < 20; ++t) {
      const std::size_t s = 2 + t % 3, n = 2 + t % 4;
      const MatrixProductCode mp = mp_build(random_inputs(f, s, n, n, rng), oracle::random_invertible(f, s, rng));
      CHECK(mp_euclidean_dual(mp).derived == euclidean_dual(mp.derived));
      const KronIsometry ks(oracle::random_monomial(f, s, rng),
                            Isometry(oracle::random_monomial(f, n, rng), static_cast<unsigned>(t % h)));
      CHECK(mp_sigma_dual(mp, ks).derived == sigma_dual(mp.derived, ks.flatten()));
    }
  }
}

TEST_CASE("hull formula equals the intersection when its precondition holds") {
  std::mt19937_64 rng(63);
  for (auto [p, h] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {3, 2}, {5, 1}}) {
    const Field f = Field::make(p, h);
    for (int t = 0; t < 20; ++t) {
      const unsigned e = (t % 2 && h % 2 == 0) ? h / 2 : 0;
      const std::size_t s = 2 + t % 2, n = 2 + t % 3;
      const Matrix a = oracle::random_orthogonal_rows(f, s, e, rng);
      const MatrixProductCode mp = mp_build(random_inputs(f, s, n, n, rng), a);
      const KronIsometry ks(Matrix::identity(f, s), Isometry(oracle::random_monomial(f, n, rng), e));
      const LinearCode direct = intersect(mp.derived, sigma_dual(mp.derived, ks.flatten()));
      CHECK(mp_sigma_hull(mp, ks).derived == direct);
      if (n <= 3 && f.order() <= 4) {
        const auto words = oracle::code_words(mp.derived);
        CHECK(oracle::code_words(direct) == oracle::intersection(words, oracle::sigma_dual(mp.derived.generator(), ks.flatten())));
      }
    }
  }
  const Field f = Field::make(3, 1);
  const Matrix a = Matrix::from_rows(f, {{f.one(), f.one()}, {f.zero(), f.one()}});
  const MatrixProductCode mp = mp_build({LinearCode(f, 2), LinearCode(f, 2)}, a);
  CHECK_THROWS_AS(mp_sigma_hull(mp, KronIsometry(Matrix::identity(f, 2), Isometry::euclidean(f, 2))), BadInput);
}

TEST_CASE("bounds are sound on small instances") {
  std::mt19937_64 rng(64);
  const Field f = Field::make(2, 2);
  int nsc_cases = 0;
  for (int t = 0; t < 40; ++t) {
    const std::size_t s = 2 + t % 2, n = 4;
    auto codes = random_inputs(f, s, n, 2, rng);
    for (auto& c : codes)
      if (c.dimension() == 0) c = oracle::random_code(f, n, 1, rng);
    const Matrix a = oracle::random_invertible(f, s, rng);
    const MatrixProductCode mp = mp_build(codes, a);
    const MpBounds b = mp_bounds(codes, a);
    const std::size_t d = min_distance(mp.derived).d;
    CHECK(d >= b.d_general);
    REQUIRE(b.dimension);
    CHECK(*b.dimension == mp.derived.dimension());
    CHECK(b.d_nsc.has_value() == is_nsc(a));
    if (b.d_nsc) {
      ++nsc_cases;
      CHECK(d >= *b.d_nsc);
      CHECK(min_distance(euclidean_dual(mp.derived)).d >= *b.d_dual_nsc);
    }
    // D_i(A) is the minimum distance of the code spanned by the first i rows.
    const auto profile = row_distance_profile(a);
    for (std::size_t i = 1; i <= s; ++i)
      CHECK(profile[i - 1] == oracle::min_weight(oracle::span(a.block(0, 0, i, s))));
  }
  CHECK(nsc_cases > 0);
}

TEST_CASE("argument validation") {
  const Field f = Field::make(2, 1), g = Field::make(3, 1);
  CHECK_THROWS_AS(mp_build({}, Matrix::identity(f, 1)), BadInput);
  CHECK_THROWS_AS(mp_build({LinearCode(f, 2)}, Matrix::identity(f, 2)), BadInput);
  CHECK_THROWS_AS(mp_build({LinearCode(f, 2), LinearCode(f, 3)}, Matrix::identity(f, 2)), BadInput);
  CHECK_THROWS_AS(mp_build({LinearCode(g, 2)}, Matrix::identity(f, 1)), BadInput);
  CHECK_THROWS_AS(mp_euclidean_dual(mp_build({LinearCode(f, 2), LinearCode(f, 2)}, Matrix(f, 2, 2))), BadInput);
  CHECK(sat_mul(kUnbounded, 2) == kUnbounded);
  CHECK(sat_mul(3, 4) == 12);
}
