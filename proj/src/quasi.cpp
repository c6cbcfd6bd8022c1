// Copyright 2026 The sigmamp Authors
// SPDX-License-Identifier: Apache-2.0

#include "sigmamp/quasi.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

#include "sigmamp/error.hpp"
#include "sigmamp/nsc.hpp"

namespace sigmamp {

bool is_quasi_sigma(const Matrix& a, const Matrix& m_hat, unsigned e) {
  if (!a.is_square() || !m_hat.is_square() || a.rows() != m_hat.rows())
    throw BadInput("quasi-sigma test: A and M_hat must be square of equal size");
  require_same_field(a, m_hat, "quasi-sigma test");
  if (!m_hat.is_monomial()) throw BadInput("M_hat is not monomial");
  const Matrix prod = a * m_hat.transpose() * a.frobenius(e).transpose();
  if (!prod.is_diagonal()) return false;
  for (Elem d : prod.diagonal_entries())
    if (d.is_zero()) return false;
  return true;
}

bool QuasiCertificate::valid() const {
  return lower.is_unit_lower_triangular() && product == lower * source &&
         diag == product * m_hat.transpose() * product.frobenius(e).transpose() && is_quasi_sigma(product, m_hat, e);
}

QuasiCertificate lift_to_quasi(const Matrix& a, const Matrix& m_tilde, unsigned e) {
  if (!a.is_square() || !m_tilde.is_square() || a.rows() != m_tilde.rows())
    throw BadInput("lift: A and M~ must be square of equal size");
  require_same_field(a, m_tilde, "lift");
  const Field& f = a.field();
  const GaloisParams gp = GaloisParams::from(e, f.degree());
  const Matrix x = a * m_tilde;
  if (!x.in_subfield(gp.g))
    throw BadInput("lift: A M~ has entries outside the subfield F_{p^" + std::to_string(gp.g) + "}");
  const Matrix s_mat = x * x.frobenius(e).transpose();
  const std::vector<Elem> minors = leading_principal_minors(s_mat);
  for (std::size_t k = 0; k < minors.size(); ++k)
    if (minors[k].is_zero())
      throw BadInput("lift: leading principal minor of order " + std::to_string(k + 1) + " vanishes");

  const std::size_t n = a.rows();
  // Row k of L_k' is (-pi_e(b_k)^T B_k^{-1}, 1, 0, ...). Later factors leave
  // the leading blocks of S untouched, so every b_k, B_k comes from S itself.
  Matrix lower = Matrix::identity(f, n);
  for (std::size_t k = n - 1; k >= 1; --k) {
    const Matrix bk = s_mat.block(0, k, k, 1);
    const Matrix row = (bk.frobenius(e).transpose() * inverse(s_mat.leading(k))).scaled(f.neg(f.one()));
    Matrix step = Matrix::identity(f, n);
    for (std::size_t j = 0; j < k; ++j) step(k, j) = row(0, j);
    lower = step * lower;
  }

  const MonomialDecomposition dec = monomial_decompose(m_tilde);
  const Matrix m_hat = dec.diag * dec.diag.frobenius(e);
  QuasiCertificate cert{lower, a, lower * a, m_hat, Matrix(f, 0, 0), e};
  cert.diag = cert.product * m_hat.transpose() * cert.product.frobenius(e).transpose();
  if (!cert.valid()) throw VerificationFailed("lift produced an invalid certificate");
  return cert;
}

// ---------------------------------------------------------------------------

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial) {
  // splitmix64 finalizer over a Weyl step indexed by the trial.
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (trial + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw BadInput("uniform draw from an empty range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

namespace {

bool leading_minors_nonzero(const Matrix& s_mat, std::size_t upto) {
  for (std::size_t k = 1; k <= upto; ++k)
    if (det(s_mat.leading(k)).is_zero()) return false;
  return true;
}

}  // namespace

AlgorithmOneResult algorithm1(const Field& field, std::size_t s, unsigned e, const Matrix& m_tilde,
                              std::uint64_t seed, const SamplerOptions& opts) {
  if (s == 0) throw BadInput("algorithm 1 needs s >= 1");
  if (m_tilde.rows() != s || !m_tilde.is_monomial()) throw BadInput("M~ must be an s x s monomial matrix");
  const GaloisParams gp = GaloisParams::from(e, field.degree());
  if (!m_tilde.in_subfield(gp.g)) throw BadInput("M~ must lie over the subfield F_{p^g}");
  const std::vector<Elem> pool = field.subfield_elements(gp.g);
  std::vector<Elem> nonzero;
  for (Elem x : pool)
    if (!x.is_zero()) nonzero.push_back(x);

  std::mt19937_64 rng(seed);
  AlgorithmOneResult res;
  std::optional<Matrix> t;
  while (!t) {
    if (res.nsc_draws == opts.nsc_retry_limit)
      throw BudgetExceeded("no NSC Toeplitz sample within the retry limit of " + std::to_string(opts.nsc_retry_limit));
    ++res.nsc_draws;
    // v[s-1+j-i] is the entry on diagonal j - i.
    std::vector<Elem> v(2 * s - 1);
    for (Elem& x : v) x = pool[uniform_below(rng, pool.size())];
    Matrix cand(field, s, s);
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < s; ++j) cand(i, j) = v[s - 1 + j - i];
    if (is_nsc(cand)) t = std::move(cand);
  }
  std::vector<Elem> dvals(s);
  for (Elem& x : dvals) x = nonzero[uniform_below(rng, nonzero.size())];
  const Matrix d = Matrix::diagonal(field, dvals);
  const Matrix r = inverse(t->frobenius(e)) * Matrix::anti_identity(field, s);

  const std::pair<const char*, Matrix> candidates[] = {
      {"TD", *t * d}, {"DT", d * *t}, {"RD", r * d}, {"DR", d * r}};
  res.toeplitz = *t;
  res.diag = d;
  for (const auto& [label, x] : candidates) {
    const Matrix xm = x * m_tilde;
    if (!leading_minors_nonzero(xm * xm.frobenius(e).transpose(), s - 1)) continue;
    res.certificate = lift_to_quasi(x, m_tilde, e);
    res.candidate = label;
    break;
  }
  return res;
}

CampaignResult sampling_campaign(const Field& field, std::size_t s, unsigned e, const Matrix& m_tilde,
                                 std::uint64_t trials, std::uint64_t master_seed, unsigned threads,
                                 const SamplerOptions& opts) {
  std::vector<std::optional<TrialRecord>> slots(trials);
  std::vector<char> failed(trials, 0);
  std::atomic<std::uint64_t> next{0};
  std::atomic<bool> invalid{false};
  auto worker = [&] {
    for (std::uint64_t i = next++; i < trials; i = next++) {
      try {
        AlgorithmOneResult r = algorithm1(field, s, e, m_tilde, trial_seed(master_seed, i), opts);
        if (!r.certificate) continue;
        if (!r.certificate->valid() || !is_nsc(r.certificate->product)) invalid = true;
        slots[i] = TrialRecord{i, r.candidate, std::move(*r.certificate)};
      } catch (const BudgetExceeded&) {
        failed[i] = 1;
      }
    }
  };
  const unsigned workers = static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, trials)));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (invalid) throw VerificationFailed("a sampled certificate failed revalidation");

  CampaignResult out;
  out.trials = trials;
  for (std::uint64_t i = 0; i < trials; ++i) {
    out.errors += failed[i];
    if (slots[i]) {
      ++out.successes;
      out.records.push_back(std::move(*slots[i]));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

TauOdResult is_tau_od(const Matrix& a) {
  if (!a.is_square()) throw BadInput("tau-OD test needs a square matrix");
  TauOdResult res;
  if (!is_nsc(a)) {
    res.reason = "not NSC";
    return res;
  }
  const Matrix prod = a * a.transpose();
  if (!prod.is_monomial()) {
    res.reason = "A A^T is not monomial";
    return res;
  }
  MonomialDecomposition dec = monomial_decompose(prod);
  res.certificate = TauOdCertificate{std::move(dec.diag), std::move(dec.perm)};
  return res;
}

}  // namespace sigmamp
