// Copyright 2026 The sigmamp Authors
// SPDX-License-Identifier: Apache-2.0

#include "sigmamp/nsc.hpp"

#include <numeric>

#include "sigmamp/error.hpp"

namespace sigmamp {

namespace {

// Advances `c` to the next ell-subset of {0..n-1} in lexicographic order.
bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

NscReport check_nsc(const Matrix& a) {
  if (!a.is_square()) throw BadInput("NSC test needs a square matrix");
  const std::size_t n = a.rows();
  NscReport report;
  std::vector<std::size_t> rows;
  for (std::size_t ell = 1; ell <= n; ++ell) {
    rows.push_back(ell - 1);
    std::vector<std::size_t> cols(ell);
    std::iota(cols.begin(), cols.end(), 0);
    do {
      ++report.minors_evaluated;
      if (det(a.select(rows, cols)).is_zero()) {
        report.witness = MinorIndex{ell, cols};
        return report;
      }
    } while (next_combination(cols, n));
  }
  report.nsc = true;
  return report;
}

std::vector<Elem> leading_principal_minors(const Matrix& a) {
  if (!a.is_square()) throw BadInput("leading principal minors need a square matrix");
  std::vector<Elem> out;
  out.reserve(a.rows());
  for (std::size_t k = 1; k <= a.rows(); ++k) out.push_back(det(a.leading(k)));
  return out;
}

Matrix nsc_closure(const Matrix& a, ClosureKind kind, const std::optional<Matrix>& diag, unsigned e) {
  if (!is_nsc(a)) throw BadInput("closure input is not NSC");
  const Field& f = a.field();
  const std::size_t n = a.rows();
  auto need_diag = [&]() -> const Matrix& {
    if (!diag || !diag->is_diagonal() || diag->rows() != n) throw BadInput("closure needs an n x n diagonal matrix");
    for (Elem d : diag->diagonal_entries())
      if (d.is_zero()) throw BadInput("closure diagonal has a zero entry");
    return *diag;
  };
  Matrix out(f, 0, 0);
  switch (kind) {
    case ClosureKind::left_diag:
      out = need_diag() * a;
      break;
    case ClosureKind::right_diag:
      out = a * need_diag();
      break;
    case ClosureKind::q_inv_transpose:
      out = Matrix::anti_identity(f, n) * inverse(a).transpose();
      break;
    case ClosureKind::frobenius_inv_q:
      if (!a.is_toeplitz()) throw BadInput("pi_e(A)^{-1} Q closure needs a Toeplitz matrix");
      out = inverse(a.frobenius(e)) * Matrix::anti_identity(f, n);
      break;
  }
  if (!is_nsc(out)) throw VerificationFailed("NSC closure produced a matrix that is not NSC");
  return out;
}

}  // namespace sigmamp
