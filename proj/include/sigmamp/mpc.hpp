// Copyright 2026 The sigmamp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sigmamp/codes.hpp"
#include "sigmamp/isometry.hpp"

namespace sigmamp {

/// [C_1, ..., C_s] . A, materialized as a code of length s n.
struct MatrixProductCode {
  std::vector<LinearCode> inputs;
  Matrix defining;
  LinearCode derived;

  std::size_t blocks() const { return inputs.size(); }
  std::size_t block_length() const { return inputs.front().length(); }
};

/// Generator is the stack over i of (a_i1 G_i | a_i2 G_i | ... | a_is G_i).
MatrixProductCode mp_build(std::vector<LinearCode> codes, Matrix a);

struct MpBounds {
  std::size_t d_general = kUnbounded;           // min D_i(A) d_i
  std::optional<std::size_t> d_nsc;             // min (s+1-i) d_i, A NSC
  std::optional<std::size_t> d_dual_nsc;        // min i d_i^{perp E}, A NSC
  std::vector<std::size_t> di_profile;          // D_i(A)
  std::optional<std::size_t> dimension;         // sum k_i when A is non-singular
};

/// Bounds from known input distances (kUnbounded marks a zero code).
MpBounds mp_bounds(const std::vector<std::size_t>& d, const std::vector<std::size_t>& d_dual,
                   const std::vector<std::size_t>& k, const Matrix& a, const EnumerationOptions& opts = {});
/// Same, computing the input distances and their dual distances exactly.
MpBounds mp_bounds(const std::vector<LinearCode>& codes, const Matrix& a, const EnumerationOptions& opts = {});

/// D_i(A) for i = 1..s: distance of the code spanned by the first i rows.
std::vector<std::size_t> row_distance_profile(const Matrix& a, const EnumerationOptions& opts = {});

/// [C_1^{perp E}, ..., C_s^{perp E}] . (A^{-1})^T.
MatrixProductCode mp_euclidean_dual(const MatrixProductCode& mp);

/// [C_1^{perp sigma'}, ..., C_s^{perp sigma'}] . (M_hat^T pi_e(A)^T)^{-1}
/// for sigma = M_hat (x) sigma'.
MatrixProductCode mp_sigma_dual(const MatrixProductCode& mp, const KronIsometry& ks);

/// Hull C(A) cap C(A)^{perp sigma} as [C'_1, ..., C'_s] . A, where C'_i = C_i
/// if the i-th diagonal entry of A M_hat^T pi_e(A)^T is zero and
/// C_i cap C_i^{perp sigma'} otherwise. The product must be diagonal; if it is
/// not, BadInput is thrown.
MatrixProductCode mp_sigma_hull(const MatrixProductCode& mp, const KronIsometry& ks);

/// Saturating product for distance arithmetic.
std::size_t sat_mul(std::size_t a, std::size_t b);

}  // namespace sigmamp
