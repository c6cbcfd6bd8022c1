// Copyright 2026 The sigmamp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sigmamp/codes.hpp"
#include "sigmamp/isometry.hpp"

namespace sigmamp {

/// Inner product under which a GRS code is asked to be self-orthogonal:
/// sum_j u_j pi_e(v_j) with e = 0 (Euclidean), h/2 (Hermitian) or any e.
enum class GrsFlavor { euclidean_so, hermitian_so, frobenius_so };

struct GrsSpec {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<Elem> points;       // distinct evaluation points alpha_j
  std::vector<Elem> multipliers;  // nonzero column multipliers v_j
  GrsFlavor flavor = GrsFlavor::euclidean_so;
  unsigned e = 0;  // Frobenius exponent; only read for frobenius_so
};

std::string to_string(GrsFlavor f);
GrsFlavor grs_flavor_from_string(const std::string& s);

/// Frobenius exponent of the flavor's inner product (I_n, e).
unsigned flavor_exponent(const Field& f, GrsFlavor flavor, unsigned e);
Isometry flavor_isometry(const Field& f, std::size_t n, GrsFlavor flavor, unsigned e);

/// Code generated by (v_j alpha_j^i), 0 <= i < k. The result is checked to be
/// MDS and self-orthogonal for the flavor; VerificationFailed otherwise.
LinearCode grs_code(const Field& f, const GrsSpec& spec, const EnumerationOptions& opts = {});

struct GrsSearchOptions {
  std::uint64_t seed = 1;
  std::uint64_t budget = 1000000;  // kernel combinations tried per point set
  std::size_t point_sets = 64;     // point sets tried before giving up
};

/// Picks points and multipliers so that grs_code(spec) succeeds.
///
/// Self-orthogonality means u_j = v_j^{1+p^e} lies in the kernel of the rows
/// (alpha_j^{i + p^e i'}). Kernel vectors are scanned, first lexicographically
/// and then at random, for one whose entries are all nonzero (1+p^e)-th
/// powers; the multipliers are then roots of those entries.
GrsSpec find_self_orthogonal_grs(const Field& f, std::size_t n, std::size_t k, GrsFlavor flavor, unsigned e = 0,
                                 const GrsSearchOptions& opts = {});

}  // namespace sigmamp
