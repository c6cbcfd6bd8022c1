// Copyright 2026 The sigmamp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sigmamp/codes.hpp"
#include "sigmamp/isometry.hpp"
#include "sigmamp/mpc.hpp"
#include "sigmamp/quasi.hpp"

namespace sigmamp {

/// A matrix-product code together with the isometry under which it is
/// self-orthogonal. Every constructor below checks that claim before returning.
struct ConstructionResult {
  std::string theorem;  // "I", "II", "III" or "IV"
  MatrixProductCode code;
  Isometry sigma;
  std::optional<KronIsometry> structure;  // sigma as M_hat (x) sigma', when known
  std::size_t claimed_dim = 0;
  std::optional<std::size_t> claimed_d_bound;
  std::optional<std::size_t> claimed_dual_bound;
  std::optional<QuasiCertificate> lift;  // Construction II only
  std::optional<Matrix> aux;             // D recovered in III, D^{-1} check matrix in IV
  std::string notes;
};

struct ConstructionOptions {
  EnumerationOptions enumeration;
  // Known input distances; computed exactly when absent. If the budget does
  // not allow it, the corresponding bound is left empty.
  std::optional<std::vector<std::size_t>> d;
  std::optional<std::vector<std::size_t>> d_dual;
};

/// sigma is the pairing of sigma' with scalar t (e = h - e',
/// M_tau = t^{-1} pi_{h-e'}(M_tau')^T) and the result is C(A)^{perp sigma'},
/// which is sigma self-orthogonal exactly when C(A) is sigma' dual-containing.
ConstructionResult construction1(const MatrixProductCode& mp, const KronIsometry& sigma_prime, Elem t,
                                 const ConstructionOptions& opts = {});

/// C(L A) with L from lift_to_quasi and sigma = (D~ pi_e(D~)) (x) sigma'.
/// Inputs must be sigma' self-orthogonal.
ConstructionResult construction2(const Matrix& a, const Matrix& m_tilde, const std::vector<LinearCode>& codes,
                                 const Isometry& sigma_prime, const ConstructionOptions& opts = {});

/// C(A) for Toeplitz NSC A with pi_e(A) M A = D Q, sigma = (M Q) (x) sigma'.
/// D is recovered from the product.
ConstructionResult construction3(const Matrix& a, const Matrix& m, const std::vector<LinearCode>& codes,
                                 const Isometry& sigma_prime, const ConstructionOptions& opts = {});

/// [C_s^{perp sigma'}, ..., C_1^{perp sigma'}] . pi_e(A)^{-1} Q D^{-1}, checked
/// against the directly computed sigma dual of C(A), sigma = D (x) sigma'.
MatrixProductCode construction4_dual(const Matrix& a, const Matrix& d, const std::vector<LinearCode>& codes,
                                     const Isometry& sigma_prime);

/// C(A) with sigma = D (x) sigma' when C_i is in C_{s+1-i}^{perp sigma'} for
/// all i and pi_e(A) A = Q D^{-1}. The inputs themselves need not be
/// self-orthogonal.
ConstructionResult construction4(const Matrix& a, const Matrix& d, const std::vector<LinearCode>& codes,
                                 const Isometry& sigma_prime, const ConstructionOptions& opts = {});

/// Seeded scan over Toeplitz matrices for A with pi_e(A) A = Q D^{-1}, D
/// diagonal. NSC candidates are preferred: the scan returns the first NSC hit,
/// or the first non-singular hit if no NSC one appears within `budget` draws.
struct ToeplitzSearchResult {
  Matrix a;
  Matrix d;
  std::uint64_t candidates = 0;
};
std::optional<ToeplitzSearchResult> search_construction4_matrix(const Field& f, std::size_t s, unsigned e,
                                                                std::uint64_t seed, std::uint64_t budget = 1000000);

}  // namespace sigmamp
