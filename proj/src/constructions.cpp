// Copyright 2026 The sigmamp Authors
// SPDX-License-Identifier: Apache-2.0

#include "sigmamp/constructions.hpp"

#include <algorithm>
#include <random>

#include "sigmamp/error.hpp"
#include "sigmamp/nsc.hpp"

namespace sigmamp {

namespace {

struct InputDistances {
  std::optional<std::vector<std::size_t>> d;
  std::optional<std::vector<std::size_t>> d_dual;
};

InputDistances input_distances(const std::vector<LinearCode>& codes, const ConstructionOptions& opts) {
  InputDistances out{opts.d, opts.d_dual};
  try {
    if (!out.d) {
      std::vector<std::size_t> d;
      for (const LinearCode& c : codes) d.push_back(min_distance(c, opts.enumeration).d);
      out.d = d;
    }
  } catch (const BudgetExceeded&) {
  }
  try {
    if (!out.d_dual) {
      std::vector<std::size_t> d;
      for (const LinearCode& c : codes) d.push_back(min_distance(euclidean_dual(c), opts.enumeration).d);
      out.d_dual = d;
    }
  } catch (const BudgetExceeded&) {
  }
  if ((out.d && out.d->size() != codes.size()) || (out.d_dual && out.d_dual->size() != codes.size()))
    throw BadInput("known distances must list one value per input code");
  return out;
}

// min (s+1-i) d_i.
std::size_t nsc_bound(const std::vector<std::size_t>& d) {
  std::size_t b = kUnbounded;
  for (std::size_t i = 0; i < d.size(); ++i) b = std::min(b, sat_mul(d.size() - i, d[i]));
  return b;
}

// min i d_i^{perp E}.
std::size_t nsc_dual_bound(const std::vector<std::size_t>& d_dual) {
  std::size_t b = kUnbounded;
  for (std::size_t i = 0; i < d_dual.size(); ++i) b = std::min(b, sat_mul(i + 1, d_dual[i]));
  return b;
}

std::size_t total_dim(const std::vector<LinearCode>& codes) {
  std::size_t k = 0;
  for (const LinearCode& c : codes) k += c.dimension();
  return k;
}

void require_self_orthogonal_inputs(const std::vector<LinearCode>& codes, const Isometry& sigma_prime) {
  for (std::size_t i = 0; i < codes.size(); ++i)
    if (!is_self_orthogonal(codes[i], sigma_prime))
      throw BadInput("input code C_" + std::to_string(i + 1) + " is not sigma' self-orthogonal");
}

void finish(ConstructionResult& r) {
  if (!is_self_orthogonal(r.code.derived, r.sigma))
    throw VerificationFailed("Construction " + r.theorem + " result is not sigma self-orthogonal");
  if (r.code.derived.dimension() != r.claimed_dim)
    throw VerificationFailed("Construction " + r.theorem + " result has dimension " +
                             std::to_string(r.code.derived.dimension()) + ", expected " +
                             std::to_string(r.claimed_dim));
}

void set_forward_bounds(ConstructionResult& r, const std::vector<LinearCode>& codes, const ConstructionOptions& opts) {
  if (!is_nsc(r.code.defining)) return;
  const InputDistances dist = input_distances(codes, opts);
  if (dist.d) r.claimed_d_bound = nsc_bound(*dist.d);
  if (dist.d_dual) r.claimed_dual_bound = nsc_dual_bound(*dist.d_dual);
}

}  // namespace

ConstructionResult construction1(const MatrixProductCode& mp, const KronIsometry& sigma_prime, Elem t,
                                 const ConstructionOptions& opts) {
  if (det(mp.defining).is_zero()) throw BadInput("Construction I needs a non-singular defining matrix");
  const Isometry flat = sigma_prime.flatten();
  if (!is_dual_containing(mp.derived, flat)) throw BadInput("C(A) is not sigma' dual-containing");
  const Isometry sigma = flat.paired(t);
  ConstructionResult r{"I", mp_sigma_dual(mp, sigma_prime), sigma, std::nullopt, 0, {}, {}, {}, {}, {}};
  r.claimed_dim = mp.derived.length() - mp.derived.dimension();
  // C(A)^{perp sigma'} inherits the dual-side bound of C(A) and vice versa.
  if (is_nsc(mp.defining)) {
    const InputDistances dist = input_distances(mp.inputs, opts);
    if (dist.d_dual) r.claimed_d_bound = nsc_dual_bound(*dist.d_dual);
    if (dist.d) r.claimed_dual_bound = nsc_bound(*dist.d);
  }
  r.notes = "sigma paired with sigma' by t = " + mp.defining.field().to_string(t);
  finish(r);
  return r;
}

ConstructionResult construction2(const Matrix& a, const Matrix& m_tilde, const std::vector<LinearCode>& codes,
                                 const Isometry& sigma_prime, const ConstructionOptions& opts) {
  require_self_orthogonal_inputs(codes, sigma_prime);
  QuasiCertificate cert = lift_to_quasi(a, m_tilde, sigma_prime.e());
  KronIsometry ks(cert.m_hat, sigma_prime);
  ConstructionResult r{"II", mp_build(codes, cert.product), ks.flatten(), ks, total_dim(codes), {}, {}, {}, {}, {}};
  r.lift = std::move(cert);
  set_forward_bounds(r, codes, opts);
  finish(r);
  return r;
}

ConstructionResult construction3(const Matrix& a, const Matrix& m, const std::vector<LinearCode>& codes,
                                 const Isometry& sigma_prime, const ConstructionOptions& opts) {
  if (!a.is_toeplitz()) throw BadInput("Construction III needs a Toeplitz defining matrix");
  if (!is_nsc(a)) throw BadInput("Construction III needs an NSC defining matrix");
  if (!m.is_monomial()) throw BadInput("Construction III needs a monomial M");
  require_self_orthogonal_inputs(codes, sigma_prime);
  const Field& f = a.field();
  const Matrix q = Matrix::anti_identity(f, a.rows());
  const Matrix d = a.frobenius(sigma_prime.e()) * m * a * q;
  if (!d.is_diagonal()) throw BadInput("pi_e(A) M A is not of the form D Q with D diagonal");
  KronIsometry ks(m * q, sigma_prime);
  ConstructionResult r{"III", mp_build(codes, a), ks.flatten(), ks, total_dim(codes), {}, {}, {}, d, {}};
  set_forward_bounds(r, codes, opts);
  finish(r);
  return r;
}

namespace {

void check_construction4_shape(const Matrix& a, const Matrix& d, const std::vector<LinearCode>& codes) {
  if (!a.is_toeplitz()) throw BadInput("Construction IV needs a Toeplitz defining matrix");
  if (det(a).is_zero()) throw BadInput("Construction IV needs a non-singular defining matrix");
  if (!d.is_diagonal() || d.rows() != a.rows()) throw BadInput("Construction IV needs an s x s diagonal D");
  for (Elem x : d.diagonal_entries())
    if (x.is_zero()) throw BadInput("Construction IV needs D with nonzero diagonal");
  if (codes.size() != a.rows()) throw BadInput("Construction IV needs s input codes");
}

}  // namespace

MatrixProductCode construction4_dual(const Matrix& a, const Matrix& d, const std::vector<LinearCode>& codes,
                                     const Isometry& sigma_prime) {
  check_construction4_shape(a, d, codes);
  const std::size_t s = a.rows();
  const Matrix q = Matrix::anti_identity(a.field(), s);
  std::vector<LinearCode> reversed;
  for (std::size_t i = s; i-- > 0;) reversed.push_back(sigma_dual(codes[i], sigma_prime));
  MatrixProductCode formula = mp_build(std::move(reversed), inverse(a.frobenius(sigma_prime.e())) * q * inverse(d));
  const KronIsometry ks(d, sigma_prime);
  const MatrixProductCode direct = mp_build(codes, a);
  if (!(formula.derived == sigma_dual(direct.derived, ks.flatten())))
    throw VerificationFailed("Construction IV dual formula disagrees with the direct sigma dual");
  return formula;
}

ConstructionResult construction4(const Matrix& a, const Matrix& d, const std::vector<LinearCode>& codes,
                                 const Isometry& sigma_prime, const ConstructionOptions& opts) {
  check_construction4_shape(a, d, codes);
  const std::size_t s = a.rows();
  for (std::size_t i = 0; i < s; ++i)
    if (!sigma_dual(codes[s - 1 - i], sigma_prime).contains(codes[i]))
      throw BadInput("C_" + std::to_string(i + 1) + " is not contained in the sigma' dual of C_" +
                     std::to_string(s - i));
  const Field& f = a.field();
  const Matrix q = Matrix::anti_identity(f, s);
  if (!(a.frobenius(sigma_prime.e()) * a == q * inverse(d)))
    throw BadInput("pi_e(A) A differs from Q D^{-1}");
  KronIsometry ks(d, sigma_prime);
  ConstructionResult r{"IV", mp_build(codes, a), ks.flatten(), ks, total_dim(codes), {}, {}, {}, d, {}};
  set_forward_bounds(r, codes, opts);
  finish(r);
  return r;
}

std::optional<ToeplitzSearchResult> search_construction4_matrix(const Field& f, std::size_t s, unsigned e,
                                                                std::uint64_t seed, std::uint64_t budget) {
  if (s == 0) throw BadInput("search needs s >= 1");
  const std::uint32_t q = f.order();
  const std::size_t free = 2 * s - 1;
  const std::uint64_t space = code_size(q, free);
  const bool exhaustive = space <= budget;
  const Matrix qm = Matrix::anti_identity(f, s);
  std::mt19937_64 rng(seed);
  std::optional<ToeplitzSearchResult> fallback;
  std::vector<std::uint32_t> digits(free, 0);
  const std::uint64_t limit = exhaustive ? space : budget;
  for (std::uint64_t t = 0; t < limit; ++t) {
    if (exhaustive) {
      for (std::size_t c = 0; c < free && t > 0; ++c) {
        if (++digits[c] < q) break;
        digits[c] = 0;
      }
    } else {
      for (auto& x : digits) x = static_cast<std::uint32_t>(uniform_below(rng, q));
    }
    Matrix a(f, s, s);
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < s; ++j) a(i, j) = Elem{digits[s - 1 + j - i]};
    if (det(a).is_zero()) continue;
    const Matrix d_inv = qm * a.frobenius(e) * a;
    if (!d_inv.is_diagonal()) continue;
    ToeplitzSearchResult hit{a, inverse(d_inv), t + 1};
    if (is_nsc(a)) return hit;
    if (!fallback) fallback = hit;
  }
  return fallback;
}

}  // namespace sigmamp
