// Copyright 2026 The sigmamp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sigmamp/matrix.hpp"

namespace sigmamp {

/// True iff A M_hat^T pi_e(A)^T is diagonal with no zero on the diagonal.
/// With M_hat = I this is quasi-orthogonal (e = 0) or quasi-unitary (e = h/2).
bool is_quasi_sigma(const Matrix& a, const Matrix& m_hat, unsigned e);

struct QuasiCertificate {
  Matrix lower;    // L, unit lower triangular
  Matrix source;   // A
  Matrix product;  // L A
  Matrix m_hat;    // D~ pi_e(D~), from M~ = D~ P~
  Matrix diag;     // (L A) m_hat^T pi_e(L A)^T
  unsigned e = 0;

  /// Rechecks every stated relation; does not test NSC.
  bool valid() const;
};

/// Finds unit lower triangular L with L A quasi-sigma-hat for
/// m_hat = D~ pi_e(D~). Needs A M~ over F_{p^g} and nonzero leading principal
/// minors of S = (A M~) pi_e(A M~)^T. L is built one row at a time from the
/// leading blocks of S: row k carries -pi_e(b_k)^T B_k^{-1}, b_k being the
/// part of column k above the diagonal.
QuasiCertificate lift_to_quasi(const Matrix& a, const Matrix& m_tilde, unsigned e);

// ---------------------------------------------------------------------------
// Random generation.

/// Deterministic per-trial seed; the same (master, trial) always maps to the
/// same stream, whatever thread runs the trial.
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial);

/// Uniform draw from [0, bound) by rejection; identical across standard libraries.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

struct SamplerOptions {
  std::size_t nsc_retry_limit = 10000;
};

struct AlgorithmOneResult {
  std::optional<QuasiCertificate> certificate;
  std::string candidate;  // "TD", "DT", "RD" or "DR" (R = pi_e(T)^{-1} Q); empty on failure
  std::optional<Matrix> toeplitz;  // the NSC Toeplitz sample
  std::optional<Matrix> diag;      // the diagonal sample
  std::size_t nsc_draws = 0;
};

/// One trial: Toeplitz T uniform over F_{p^g} conditioned on NSC, D uniform
/// over nonzero diagonals, then the first candidate among T D, D T, R D, D R
/// whose S has nonzero leading minors of orders 1..s-1 is lifted.
AlgorithmOneResult algorithm1(const Field& field, std::size_t s, unsigned e, const Matrix& m_tilde,
                              std::uint64_t seed, const SamplerOptions& opts = {});

struct TrialRecord {
  std::uint64_t trial = 0;
  std::string candidate;
  QuasiCertificate certificate;
};

struct CampaignResult {
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  std::uint64_t errors = 0;  // trials that hit the NSC retry limit
  std::vector<TrialRecord> records;  // ordered by trial index
};

/// Runs `trials` independently seeded trials on up to `threads` workers. Each
/// certificate is revalidated (NSC product, quasi-sigma-hat) before it is kept.
CampaignResult sampling_campaign(const Field& field, std::size_t s, unsigned e, const Matrix& m_tilde,
                                 std::uint64_t trials, std::uint64_t master_seed, unsigned threads,
                                 const SamplerOptions& opts = {});

// ---------------------------------------------------------------------------

struct TauOdCertificate {
  Matrix d;  // diagonal, A A^T = d p
  Matrix p;
};

struct TauOdResult {
  std::optional<TauOdCertificate> certificate;
  std::string reason;  // why it was rejected
};

/// NSC A with A A^T monomial.
TauOdResult is_tau_od(const Matrix& a);

}  // namespace sigmamp
