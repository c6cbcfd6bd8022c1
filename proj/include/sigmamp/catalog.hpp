// Copyright 2026 The sigmamp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sigmamp/json_io.hpp"
#include "sigmamp/quasi.hpp"

namespace sigmamp {

/// One JSON-lines record:
///   {"schema", "id", "kind", "field", "matrix", "companion", "provenance"}
/// kind is quasi_sigma, quasi_unitary, quasi_orthogonal or tau_od. The
/// companion holds {"m_hat", "e", "diag"} for the quasi kinds and {"d", "p"}
/// for tau_od. The id is a content hash of everything but the id itself.
struct CatalogRecord {
  io::json body;

  const std::string& id() const;
  const std::string& kind() const;
};

struct Provenance {
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> trial;
};

/// quasi_orthogonal for e = 0 with m_hat = I, quasi_unitary for 2e = h with
/// m_hat = I, quasi_sigma otherwise.
CatalogRecord make_record(const QuasiCertificate& c, const Provenance& prov = {});
CatalogRecord make_record(const Matrix& a, const TauOdCertificate& c, const Provenance& prov = {});

/// FNV-1a 64 over the compact dump of the record without "id", as 16 hex digits.
std::string content_id(const io::json& body);

/// Parses and revalidates a record; throws VerificationFailed naming the
/// failed predicate and BadInput on malformed JSON.
CatalogRecord parse_record(const io::json& j);

struct CatalogCheck {
  std::size_t valid = 0;
  std::vector<std::string> ids;  // valid record ids in file order
  struct Quarantined {
    std::size_t line;
    std::string reason;
  };
  std::vector<Quarantined> quarantined;
};

class Catalog {
 public:
  explicit Catalog(std::string path) : path_(std::move(path)) {}

  const std::string& path() const { return path_; }
  std::string quarantine_path() const { return path_ + ".quarantine"; }

  /// Appends unless a record with the same id is present. Returns whether it
  /// was written.
  bool add(const CatalogRecord& r) const;
  /// Every record, revalidated; throws on the first bad line.
  std::vector<CatalogRecord> load() const;
  /// Revalidates every line. Failing lines move to the quarantine file and
  /// the catalog is rewritten with the remainder.
  CatalogCheck check() const;

 private:
  std::string path_;
};

}  // namespace sigmamp
