// Copyright 2026 The sigmamp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "sigmamp/codes.hpp"
#include "sigmamp/isometry.hpp"
#include "sigmamp/mpc.hpp"
#include "sigmamp/quasi.hpp"

namespace sigmamp::io {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

/// {"p", "h", "modulus"}. Equal descriptors share one Field instance.
json field_to_json(const Field& f);
Field field_from_json(const json& j);
/// Cached Field::make(p, h) with the default modulus.
Field default_field(std::uint32_t p, unsigned h);
/// Field of order q = p^h; BadInput if q is not a prime power.
Field field_of_order(std::uint64_t q);

/// Accepts [c0, ..., c_{h-1}], "w^k", "0", "1", a small integer (prime
/// subfield), or {"coeffs": [...]} / {"log": k}.
Elem elem_from_json(const Field& f, const json& j);
/// "0" or "w^k".
json elem_to_json(const Field& f, Elem x);
/// {"coeffs": [...], "log": "w^k"} for standalone element output.
json elem_detail(const Field& f, Elem x);

/// {"field": ..., "rows": [[...]]}. A bare rows array is accepted when a
/// field is supplied by the caller.
Matrix matrix_from_json(const json& j, const std::optional<Field>& f = std::nullopt);
json matrix_to_json(const Matrix& m);
json rows_to_json(const Matrix& m);

/// {"field", "n", "gen"}; gen is a matrix object or a rows array.
LinearCode code_from_json(const json& j, const std::optional<Field>& f = std::nullopt);
json code_to_json(const LinearCode& c);

/// {"m_tau": matrix, "e": int} or {"kind": "euclidean"|"hermitian"|"galois"|"symplectic", "n": int, "e": int}.
Isometry isometry_from_json(const json& j, const Field& f);
json isometry_to_json(const Isometry& s);

/// {"outer": matrix, "inner": isometry}.
KronIsometry kron_from_json(const json& j, const Field& f);

/// {"codes": [...], "defining": matrix}.
MatrixProductCode mp_from_json(const json& j);
json mp_to_json(const MatrixProductCode& mp);

json enumerator_to_json(const WeightEnumerator& w);
json certificate_to_json(const QuasiCertificate& c);

/// Field a document is expressed over: its "field" member, or the first one
/// found on a nested matrix or code.
Field find_field(const json& j);

/// Reads a whole file as JSON; BadInput on I/O or parse failure.
json read_json_file(const std::string& path);

}  // namespace sigmamp::io
