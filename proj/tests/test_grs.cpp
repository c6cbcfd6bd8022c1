// Copyright 2026 The sigmamp Authors
// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"
#include "oracles.hpp"
#include "sigmamp/error.hpp"
#include "sigmamp/grs.hpp"

using namespace sigmamp;

namespace {

struct Case {
  std::uint32_t p;
  unsigned h;
  std::size_t n, k;
  GrsFlavor flavor;
  unsigned e;
};

}  // namespace

TEST_CASE("self-orthogonal GRS codes are found and verified") {
  const std::vector<Case> cases = {
      {2, 3, 6, 3, GrsFlavor::euclidean_so, 0}, {2, 3, 7, 2, GrsFlavor::euclidean_so, 0},
      {2, 3, 8, 4, GrsFlavor::euclidean_so, 0}, {2, 2, 4, 1, GrsFlavor::hermitian_so, 0},
      {3, 2, 8, 2, GrsFlavor::hermitian_so, 0}, {3, 2, 6, 2, GrsFlavor::hermitian_so, 0},
      {3, 4, 6, 1, GrsFlavor::frobenius_so, 3}, {2, 6, 8, 1, GrsFlavor::euclidean_so, 0},
      {2, 4, 5, 2, GrsFlavor::hermitian_so, 0},
  };
  for (const Case& c : cases) {
    const Field f = Field::make(c.p, c.h);
    CAPTURE(f.name());
    CAPTURE(c.n);
    CAPTURE(c.k);
    const GrsSpec spec = find_self_orthogonal_grs(f, c.n, c.k, c.flavor, c.e);
    CHECK(spec.n == c.n);
    CHECK(spec.k == c.k);
    const LinearCode code = grs_code(f, spec);
    CHECK(code.dimension() == c.k);
    const Isometry iso = flavor_isometry(f, c.n, c.flavor, c.e);
    CHECK(is_self_orthogonal(code, iso));
    CHECK(min_distance(code).d == c.n - c.k + 1);
    // Brute-force containment in the dual on the smallest cases.
    if (oracle::ipow(f.order(), c.n) <= 70000) {
      const auto words = oracle::code_words(code);
      const auto dual = oracle::sigma_dual(code.generator(), iso);
      CHECK(std::includes(dual.begin(), dual.end(), words.begin(), words.end()));
    }
    // Same options give the same code.
    CHECK(grs_code(f, find_self_orthogonal_grs(f, c.n, c.k, c.flavor, c.e)) == code);
  }
}

TEST_CASE("GRS generator rows are multiplier-weighted evaluations") {
  const Field f = Field::make(3, 2);
  const GrsSpec spec = find_self_orthogonal_grs(f, 6, 2, GrsFlavor::hermitian_so);
  const LinearCode c = grs_code(f, spec);
  for (std::size_t i = 0; i < spec.k; ++i) {
    Vec row;
    for (std::size_t j = 0; j < spec.n; ++j) row.push_back(f.mul(spec.multipliers[j], f.pow(spec.points[j], static_cast<std::int64_t>(i))));
    CHECK(c.contains(row));
  }
}

TEST_CASE("GRS argument and verification failures") {
  const Field f = Field::make(2, 3);
  CHECK_THROWS_AS(find_self_orthogonal_grs(f, 9, 2, GrsFlavor::euclidean_so), BadInput);
  CHECK_THROWS_AS(find_self_orthogonal_grs(f, 6, 4, GrsFlavor::euclidean_so), BadInput);
  CHECK_THROWS_AS(find_self_orthogonal_grs(f, 6, 2, GrsFlavor::hermitian_so), BadInput);
  GrsSpec plain{4, 2, {f.zero(), f.one(), f.omega(), f.omega_pow(2)}, {f.one(), f.one(), f.one(), f.one()},
                GrsFlavor::euclidean_so, 0};
  CHECK_THROWS_AS(grs_code(f, plain), VerificationFailed);
  plain.points[1] = plain.points[0];
  CHECK_THROWS_AS(grs_code(f, plain), BadInput);
  CHECK(grs_flavor_from_string("hermitian") == GrsFlavor::hermitian_so);
  CHECK(grs_flavor_from_string(to_string(GrsFlavor::frobenius_so)) == GrsFlavor::frobenius_so);
  CHECK_THROWS_AS(grs_flavor_from_string("symplectic"), BadInput);
}
