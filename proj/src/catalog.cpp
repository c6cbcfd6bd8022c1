// Copyright 2026 The sigmamp Authors
// SPDX-License-Identifier: Apache-2.0

#include "sigmamp/catalog.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include "sigmamp/error.hpp"
#include "sigmamp/nsc.hpp"

namespace sigmamp {

using io::json;

namespace {

// Element reps are packed coefficients, so re-homing a matrix onto the
// canonical field of the same modulus keeps every entry while making the
// "w^k" strings refer to omega = x.
json canonical_rows(const Matrix& m) {
  const Field f = io::field_from_json(io::field_to_json(m.field()));
  Matrix out(f, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return io::rows_to_json(out);
}

json provenance_json(const Provenance& p) {
  return json{{"seed", p.seed ? json(*p.seed) : json()},
              {"trial", p.trial ? json(*p.trial) : json()},
              {"tool_version", io::kToolVersion}};
}

CatalogRecord finish(json body) {
  json out{{"schema", io::kSchemaVersion}, {"id", content_id(body)}};
  for (auto& [k, v] : body.items()) out[k] = v;
  return CatalogRecord{out};
}

const json& at(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw BadInput(std::string("catalog record has no '") + key + "'");
  return j.at(key);
}

}  // namespace

const std::string& CatalogRecord::id() const { return body.at("id").get_ref<const std::string&>(); }
const std::string& CatalogRecord::kind() const { return body.at("kind").get_ref<const std::string&>(); }

std::string content_id(const json& body) {
  json content = body;
  content.erase("id");
  content.erase("schema");
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : content.dump()) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << hash;
  return out.str();
}

CatalogRecord make_record(const QuasiCertificate& c, const Provenance& prov) {
  const Field& f = c.product.field();
  std::string kind = "quasi_sigma";
  if (c.m_hat.is_identity() && c.e == 0) kind = "quasi_orthogonal";
  else if (c.m_hat.is_identity() && 2 * c.e == f.degree()) kind = "quasi_unitary";
  json body{{"kind", kind},
            {"field", io::field_to_json(f)},
            {"matrix", canonical_rows(c.product)},
            {"companion", {{"m_hat", canonical_rows(c.m_hat)}, {"e", c.e}, {"diag", canonical_rows(c.diag)}}},
            {"provenance", provenance_json(prov)}};
  return finish(std::move(body));
}

CatalogRecord make_record(const Matrix& a, const TauOdCertificate& c, const Provenance& prov) {
  json body{{"kind", "tau_od"},
            {"field", io::field_to_json(a.field())},
            {"matrix", canonical_rows(a)},
            {"companion", {{"d", canonical_rows(c.d)}, {"p", canonical_rows(c.p)}}},
            {"provenance", provenance_json(prov)}};
  return finish(std::move(body));
}

CatalogRecord parse_record(const json& j) {
  try {
    if (at(j, "schema").get<int>() != io::kSchemaVersion) throw BadInput("unsupported catalog schema version");
    const std::string id = at(j, "id").get<std::string>();
    if (content_id(j) != id) throw VerificationFailed("content hash does not match id " + id);
    const Field f = io::field_from_json(at(j, "field"));
    const Matrix a = io::matrix_from_json(at(j, "matrix"), f);
    const json& comp = at(j, "companion");
    const std::string kind = at(j, "kind").get<std::string>();
    if (!is_nsc(a)) throw VerificationFailed("stored matrix is not NSC");
    if (kind == "tau_od") {
      const Matrix d = io::matrix_from_json(at(comp, "d"), f);
      const Matrix p = io::matrix_from_json(at(comp, "p"), f);
      if (!d.is_diagonal() || !p.is_permutation() || !(a * a.transpose() == d * p))
        throw VerificationFailed("A A^T differs from the stored D P");
      for (Elem x : d.diagonal_entries())
        if (x.is_zero()) throw VerificationFailed("stored D has a zero diagonal entry");
    } else if (kind == "quasi_sigma" || kind == "quasi_unitary" || kind == "quasi_orthogonal") {
      const Matrix m_hat = io::matrix_from_json(at(comp, "m_hat"), f);
      const unsigned e = at(comp, "e").get<unsigned>();
      const Matrix diag = io::matrix_from_json(at(comp, "diag"), f);
      if (e >= f.degree()) throw BadInput("Frobenius exponent out of range");
      if (a.rows() != a.cols() || m_hat.rows() != a.rows() || m_hat.cols() != a.cols())
        throw BadInput("stored matrices have inconsistent shapes");
      if (!is_quasi_sigma(a, m_hat, e)) throw VerificationFailed("stored matrix is not quasi-sigma");
      if (!(a * m_hat.transpose() * a.frobenius(e).transpose() == diag))
        throw VerificationFailed("stored diagonal differs from A M_hat^T pi_e(A)^T");
      if (kind != "quasi_sigma" && !m_hat.is_identity()) throw VerificationFailed(kind + " needs M_hat = I");
      if (kind == "quasi_orthogonal" && e != 0) throw VerificationFailed("quasi_orthogonal needs e = 0");
      if (kind == "quasi_unitary" && 2 * e != f.degree()) throw VerificationFailed("quasi_unitary needs e = h/2");
    } else {
      throw BadInput("unknown catalog kind '" + kind + "'");
    }
    return CatalogRecord{j};
  } catch (const json::exception& e) {
    throw BadInput(std::string("malformed catalog record: ") + e.what());
  }
}

bool Catalog::add(const CatalogRecord& r) const {
  parse_record(r.body);
  std::set<std::string> ids;
  for (const CatalogRecord& existing : load()) ids.insert(existing.id());
  if (ids.count(r.id())) return false;
  std::ofstream out(path_, std::ios::app);
  if (!out) throw BadInput("cannot write catalog '" + path_ + "'");
  out << r.body.dump() << '\n';
  return true;
}

std::vector<CatalogRecord> Catalog::load() const {
  std::vector<CatalogRecord> out;
  std::ifstream in(path_);
  if (!in) return out;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (line.empty()) continue;
    try {
      out.push_back(parse_record(json::parse(line)));
    } catch (const json::exception& e) {
      throw BadInput(path_ + ":" + std::to_string(n) + ": " + e.what());
    } catch (const Error& e) {
      throw VerificationFailed(path_ + ":" + std::to_string(n) + ": " + e.what());
    }
  }
  return out;
}

CatalogCheck Catalog::check() const {
  CatalogCheck report;
  std::ifstream in(path_);
  if (!in) return report;
  std::vector<std::string> keep, bad;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (line.empty()) continue;
    try {
      const CatalogRecord r = parse_record(json::parse(line));
      keep.push_back(line);
      report.ids.push_back(r.id());
      ++report.valid;
    } catch (const json::exception& e) {
      bad.push_back(line);
      report.quarantined.push_back({n, std::string("malformed JSON: ") + e.what()});
    } catch (const Error& e) {
      bad.push_back(line);
      report.quarantined.push_back({n, e.what()});
    }
  }
  in.close();
  if (bad.empty()) return report;
  {
    std::ofstream q(quarantine_path(), std::ios::app);
    if (!q) throw BadInput("cannot write quarantine file '" + quarantine_path() + "'");
    for (const std::string& l : bad) q << l << '\n';
  }
  const std::string tmp = path_ + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw BadInput("cannot rewrite catalog '" + path_ + "'");
    for (const std::string& l : keep) out << l << '\n';
  }
  if (std::rename(tmp.c_str(), path_.c_str()) != 0) throw BadInput("cannot replace catalog '" + path_ + "'");
  return report;
}

}  // namespace sigmamp
