// Copyright 2026 The sigmamp Authors
// SPDX-License-Identifier: Apache-2.0

#include "sigmamp/grs.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "sigmamp/error.hpp"
#include "sigmamp/quasi.hpp"

namespace sigmamp {

std::string to_string(GrsFlavor f) {
  switch (f) {
    case GrsFlavor::euclidean_so:
      return "euclidean_so";
    case GrsFlavor::hermitian_so:
      return "hermitian_so";
    case GrsFlavor::frobenius_so:
      return "frobenius_so";
  }
  return "unknown";
}

GrsFlavor grs_flavor_from_string(const std::string& s) {
  if (s == "euclidean_so" || s == "euclidean") return GrsFlavor::euclidean_so;
  if (s == "hermitian_so" || s == "hermitian") return GrsFlavor::hermitian_so;
  if (s == "frobenius_so" || s == "frobenius") return GrsFlavor::frobenius_so;
  throw BadInput("unknown GRS flavor '" + s + "'");
}

unsigned flavor_exponent(const Field& f, GrsFlavor flavor, unsigned e) {
  switch (flavor) {
    case GrsFlavor::euclidean_so:
      return 0;
    case GrsFlavor::hermitian_so:
      if (f.degree() % 2) throw BadInput("Hermitian flavor needs an even extension degree");
      return f.degree() / 2;
    case GrsFlavor::frobenius_so:
      if (e >= f.degree()) throw BadInput("Frobenius exponent outside [0, h)");
      return e;
  }
  return 0;
}

Isometry flavor_isometry(const Field& f, std::size_t n, GrsFlavor flavor, unsigned e) {
  return Isometry(Matrix::identity(f, n), flavor_exponent(f, flavor, e));
}

namespace {

Matrix grs_generator(const Field& f, const GrsSpec& spec) {
  if (spec.points.size() != spec.n || spec.multipliers.size() != spec.n)
    throw BadInput("GRS spec needs n points and n multipliers");
  if (spec.k == 0 || spec.k > spec.n) throw BadInput("GRS dimension must lie in [1, n]");
  if (std::set<Elem>(spec.points.begin(), spec.points.end()).size() != spec.n)
    throw BadInput("GRS evaluation points are not distinct");
  Matrix g(f, spec.k, spec.n);
  for (std::size_t j = 0; j < spec.n; ++j) {
    if (!f.contains(spec.points[j]) || !f.contains(spec.multipliers[j]) || spec.multipliers[j].is_zero())
      throw BadInput("GRS multipliers must be nonzero field elements");
    Elem power = f.one();
    for (std::size_t i = 0; i < spec.k; ++i) {
      g(i, j) = f.mul(spec.multipliers[j], power);
      power = f.mul(power, spec.points[j]);
    }
  }
  return g;
}

std::uint64_t pow_u64(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

LinearCode grs_code(const Field& f, const GrsSpec& spec, const EnumerationOptions& opts) {
  const LinearCode c = LinearCode::from_generator(grs_generator(f, spec));
  if (c.dimension() != spec.k) throw VerificationFailed("GRS generator is not of full rank");
  const Isometry iso = flavor_isometry(f, spec.n, spec.flavor, spec.e);
  if (!is_self_orthogonal(c, iso))
    throw VerificationFailed("GRS code is not self-orthogonal for flavor " + to_string(spec.flavor));
  const DistanceReport d = min_distance(c, opts);
  if (d.d != spec.n - spec.k + 1) throw VerificationFailed("GRS code is not MDS");
  return c;
}

GrsSpec find_self_orthogonal_grs(const Field& f, std::size_t n, std::size_t k, GrsFlavor flavor, unsigned e,
                                 const GrsSearchOptions& opts) {
  const std::uint32_t q = f.order();
  if (n > q) throw BadInput("GRS length exceeds the field size");
  if (k == 0 || 2 * k > n) throw BadInput("self-orthogonal GRS needs 1 <= k <= n/2");
  const unsigned fe = flavor_exponent(f, flavor, e);
  const std::uint64_t pe = pow_u64(f.characteristic(), fe);
  const std::uint64_t expo = 1 + pe;  // u_j = v_j^expo
  const std::uint64_t power_test = (q - 1) / std::gcd<std::uint64_t>(expo, q - 1);

  std::vector<std::uint64_t> exponents;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t i2 = 0; i2 < k; ++i2) exponents.push_back(i + pe * i2);
  std::sort(exponents.begin(), exponents.end());
  exponents.erase(std::unique(exponents.begin(), exponents.end()), exponents.end());

  std::vector<Elem> order{f.zero()};
  for (std::uint32_t i = 0; i + 1 < q; ++i) order.push_back(f.omega_pow(i));

  std::mt19937_64 rng(opts.seed);
  for (std::size_t attempt = 0; attempt < opts.point_sets; ++attempt) {
    std::vector<Elem> points(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n));
    if (attempt > 0) {
      std::vector<Elem> shuffled = order;
      for (std::size_t i = 0; i < n; ++i) std::swap(shuffled[i], shuffled[i + uniform_below(rng, q - i)]);
      points.assign(shuffled.begin(), shuffled.begin() + static_cast<std::ptrdiff_t>(n));
    }
    Matrix v(f, exponents.size(), n);
    for (std::size_t r = 0; r < exponents.size(); ++r)
      for (std::size_t j = 0; j < n; ++j)
        v(r, j) = (exponents[r] == 0) ? f.one() : f.pow(points[j], static_cast<std::int64_t>(exponents[r]));
    const Matrix kernel = right_nullspace(v);
    const std::size_t dim = kernel.cols();
    if (dim == 0) continue;

    auto acceptable = [&](const Vec& u) {
      for (Elem x : u)
        if (x.is_zero() || f.pow(x, static_cast<std::int64_t>(power_test)) != f.one()) return false;
      return true;
    };
    auto combine = [&](const std::vector<Elem>& coef) {
      Vec u(n, Elem{0});
      for (std::size_t c = 0; c < dim; ++c)
        if (!coef[c].is_zero())
          for (std::size_t j = 0; j < n; ++j) u[j] = f.add(u[j], f.mul(coef[c], kernel(j, c)));
      return u;
    };

    std::optional<Vec> found;
    const std::uint64_t space = code_size(q, dim);
    if (space <= opts.budget) {
      std::vector<std::uint32_t> digits(dim, 0);
      for (std::uint64_t t = 1; t < space && !found; ++t) {
        for (std::size_t c = 0; c < dim; ++c) {
          if (++digits[c] < q) break;
          digits[c] = 0;
        }
        std::vector<Elem> coef(dim);
        for (std::size_t c = 0; c < dim; ++c) coef[c] = order[digits[c]];
        Vec u = combine(coef);
        if (acceptable(u)) found = std::move(u);
      }
    } else {
      for (std::uint64_t t = 0; t < opts.budget && !found; ++t) {
        std::vector<Elem> coef(dim);
        for (Elem& x : coef) x = order[uniform_below(rng, q)];
        Vec u = combine(coef);
        if (acceptable(u)) found = std::move(u);
      }
    }
    if (!found) continue;

    GrsSpec spec{n, k, points, {}, flavor, e};
    for (Elem u : *found) {
      const std::uint64_t a = f.log(u);
      std::optional<Elem> root;
      for (std::uint64_t b = 0; b + 1 < q && !root; ++b)
        if ((b * expo) % (q - 1) == a) root = f.omega_pow(static_cast<std::int64_t>(b));
      spec.multipliers.push_back(*root);
    }
    return spec;
  }
  throw BudgetExceeded("no self-orthogonal GRS multipliers found for [" + std::to_string(n) + "," +
                       std::to_string(k) + "] over " + f.name() + " within the search budget");
}

}  // namespace sigmamp
