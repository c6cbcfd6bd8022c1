// Copyright 2026 The sigmamp Authors
// SPDX-License-Identifier: Apache-2.0

#include "sigmamp/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

#include "sigmamp/error.hpp"

namespace sigmamp::io {

namespace {

using Key = std::tuple<std::uint32_t, unsigned, std::vector<std::uint32_t>>;

Field cached_field(std::uint32_t p, unsigned h, const std::optional<std::vector<std::uint32_t>>& modulus) {
  static std::mutex mu;
  static std::map<Key, Field> cache;
  std::vector<std::uint32_t> key_mod = modulus ? *modulus : Field::default_modulus(p, h).value_or(std::vector<std::uint32_t>{});
  const Key key{p, h, key_mod};
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  Field f = Field::make(p, h, modulus);
  cache.emplace(Key{p, h, f.modulus()}, f);
  cache.emplace(key, f);
  return f;
}

const json& member(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw BadInput(std::string("missing JSON member '") + name + "'");
  return j.at(name);
}

std::int64_t parse_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw BadInput("cannot parse " + what + " '" + s + "'");
  return v;
}

}  // namespace

json field_to_json(const Field& f) {
  return json{{"p", f.characteristic()}, {"h", f.degree()}, {"modulus", f.modulus()}};
}

Field field_from_json(const json& j) {
  try {
    const auto p = member(j, "p").get<std::uint32_t>();
    const auto h = member(j, "h").get<unsigned>();
    std::optional<std::vector<std::uint32_t>> modulus;
    if (j.contains("modulus") && !j.at("modulus").is_null()) modulus = j.at("modulus").get<std::vector<std::uint32_t>>();
    return cached_field(p, h, modulus);
  } catch (const json::exception& e) {
    throw BadInput(std::string("malformed field descriptor: ") + e.what());
  }
}

Field default_field(std::uint32_t p, unsigned h) { return cached_field(p, h, std::nullopt); }

Field field_of_order(std::uint64_t q) {
  const auto primes = prime_factors(q);
  if (q < 2 || primes.size() != 1) throw BadInput("field order " + std::to_string(q) + " is not a prime power");
  const std::uint64_t p = primes.front();
  unsigned h = 0;
  for (std::uint64_t x = q; x > 1; x /= p) ++h;
  return default_field(static_cast<std::uint32_t>(p), h);
}

Elem elem_from_json(const Field& f, const json& j) {
  if (j.is_array()) {
    const auto c = j.get<std::vector<std::uint32_t>>();
    if (c.size() != f.degree()) throw BadInput("element coefficient vector must have length h");
    for (auto x : c)
      if (x >= f.characteristic()) throw BadInput("element coefficient outside [0, p)");
    return f.from_coeffs(c);
  }
  if (j.is_number_integer()) return f.constant(j.get<std::int64_t>());
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    if (s.rfind("w^", 0) == 0) return f.omega_pow(parse_int(s.substr(2), "power of w"));
    if (s == "w") return f.omega();
    return f.constant(parse_int(s, "field element"));
  }
  if (j.is_object()) {
    if (j.contains("coeffs")) return elem_from_json(f, j.at("coeffs"));
    if (j.contains("log")) {
      const json& l = j.at("log");
      return l.is_string() ? elem_from_json(f, l) : f.omega_pow(l.get<std::int64_t>());
    }
  }
  throw BadInput("unrecognized field element " + j.dump());
}

json elem_to_json(const Field& f, Elem x) { return f.to_string(x); }

json elem_detail(const Field& f, Elem x) {
  return json{{"coeffs", f.coeffs(x)}, {"log", f.to_string(x)}};
}

Matrix matrix_from_json(const json& j, const std::optional<Field>& ctx) {
  const json* rows = &j;
  std::optional<Field> f = ctx;
  if (j.is_object()) {
    if (j.contains("field")) f = field_from_json(j.at("field"));
    rows = &member(j, "rows");
  }
  if (!f) throw BadInput("matrix has no field descriptor");
  if (!rows->is_array()) throw BadInput("matrix rows must be an array");
  std::vector<Vec> out;
  for (const json& r : *rows) {
    if (!r.is_array()) throw BadInput("matrix row must be an array");
    Vec v;
    for (const json& x : r) v.push_back(elem_from_json(*f, x));
    out.push_back(std::move(v));
  }
  if (out.empty()) {
    const std::size_t cols = j.is_object() && j.contains("cols") ? j.at("cols").get<std::size_t>() : 0;
    return Matrix(*f, 0, cols);
  }
  return Matrix::from_rows(*f, out);
}

json rows_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(elem_to_json(m.field(), m(i, j)));
    rows.push_back(std::move(r));
  }
  return rows;
}

json matrix_to_json(const Matrix& m) {
  json j{{"field", field_to_json(m.field())}, {"rows", rows_to_json(m)}};
  if (m.rows() == 0) j["cols"] = m.cols();
  return j;
}

LinearCode code_from_json(const json& j, const std::optional<Field>& ctx) {
  std::optional<Field> f = ctx;
  if (j.contains("field")) f = field_from_json(j.at("field"));
  const json& gen = member(j, "gen");
  const Matrix g = matrix_from_json(gen, f);
  const std::size_t n = j.contains("n") ? j.at("n").get<std::size_t>() : g.cols();
  if (g.rows() == 0) return LinearCode(g.field(), n);
  if (g.cols() != n) throw BadInput("code generator width differs from n");
  return LinearCode::from_generator(g);
}

json code_to_json(const LinearCode& c) {
  return json{{"field", field_to_json(c.field())}, {"n", c.length()}, {"gen", rows_to_json(c.generator())}};
}

Isometry isometry_from_json(const json& j, const Field& f) {
  if (j.contains("m_tau")) {
    const unsigned e = j.contains("e") ? j.at("e").get<unsigned>() : 0;
    return Isometry(matrix_from_json(j.at("m_tau"), f), e);
  }
  const std::string kind = member(j, "kind").get<std::string>();
  const std::size_t n = member(j, "n").get<std::size_t>();
  if (kind == "euclidean") return Isometry::euclidean(f, n);
  if (kind == "hermitian") return Isometry::hermitian(f, n);
  if (kind == "galois") return Isometry::galois(f, n, member(j, "e").get<unsigned>());
  if (kind == "symplectic") return Isometry::symplectic(f, n);
  throw BadInput("unknown isometry kind '" + kind + "'");
}

json isometry_to_json(const Isometry& s) {
  return json{{"m_tau", rows_to_json(s.m_tau())}, {"e", s.e()}};
}

KronIsometry kron_from_json(const json& j, const Field& f) {
  return KronIsometry(matrix_from_json(member(j, "outer"), f), isometry_from_json(member(j, "inner"), f));
}

MatrixProductCode mp_from_json(const json& j) {
  const Field f = find_field(j);
  std::vector<LinearCode> codes;
  for (const json& c : member(j, "codes")) codes.push_back(code_from_json(c, f));
  return mp_build(std::move(codes), matrix_from_json(member(j, "defining"), f));
}

json mp_to_json(const MatrixProductCode& mp) {
  json codes = json::array();
  for (const LinearCode& c : mp.inputs) codes.push_back(code_to_json(c));
  return json{{"field", field_to_json(mp.defining.field())},
              {"codes", codes},
              {"defining", rows_to_json(mp.defining)},
              {"derived", code_to_json(mp.derived)}};
}

json enumerator_to_json(const WeightEnumerator& w) {
  json out = json::array();
  for (const BigInt& c : w.counts) {
    if (c <= std::numeric_limits<std::uint64_t>::max()) out.push_back(static_cast<std::uint64_t>(c));
    else out.push_back(c.str());
  }
  return out;
}

json certificate_to_json(const QuasiCertificate& c) {
  return json{{"field", field_to_json(c.source.field())},
              {"e", c.e},
              {"source", rows_to_json(c.source)},
              {"lower", rows_to_json(c.lower)},
              {"matrix", rows_to_json(c.product)},
              {"m_hat", rows_to_json(c.m_hat)},
              {"diag", rows_to_json(c.diag)}};
}

Field find_field(const json& j) {
  if (j.is_object()) {
    if (j.contains("field") && j.at("field").is_object()) return field_from_json(j.at("field"));
    for (const auto& [key, value] : j.items())
      if (value.is_object() || value.is_array()) {
        try {
          return find_field(value);
        } catch (const BadInput&) {
        }
      }
  } else if (j.is_array()) {
    for (const json& v : j)
      if (v.is_object() || v.is_array()) {
        try {
          return find_field(v);
        } catch (const BadInput&) {
        }
      }
  }
  throw BadInput("document has no field descriptor");
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadInput("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return json::parse(ss.str());
  } catch (const json::exception& e) {
    throw BadInput("'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace sigmamp::io
