// Copyright 2026 The sigmamp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sigmamp/matrix.hpp"

namespace sigmamp {

/// Submatrix made of the first `ell` rows and the (0-based, increasing) columns `cols`.
struct MinorIndex {
  std::size_t ell = 0;
  std::vector<std::size_t> cols;

  friend bool operator==(const MinorIndex&, const MinorIndex&) = default;
};

struct NscReport {
  bool nsc = false;
  std::optional<MinorIndex> witness;  // first singular minor, scan order
  std::size_t minors_evaluated = 0;
};

/// Non-singular-by-columns test. Minors are scanned by increasing ell and then
/// lexicographic column set; the scan stops at the first singular one.
NscReport check_nsc(const Matrix& a);
inline bool is_nsc(const Matrix& a) { return check_nsc(a).nsc; }

/// det of each leading k x k block, k = 1..n.
std::vector<Elem> leading_principal_minors(const Matrix& a);

enum class ClosureKind { left_diag, right_diag, q_inv_transpose, frobenius_inv_q };

/// Transforms that keep the NSC property: D A, A D, Q (A^{-1})^T and, for
/// Toeplitz A, pi_e(A)^{-1} Q. The result is rechecked; a failure there throws
/// VerificationFailed.
Matrix nsc_closure(const Matrix& a, ClosureKind kind, const std::optional<Matrix>& diag = std::nullopt,
                   unsigned e = 0);

}  // namespace sigmamp
