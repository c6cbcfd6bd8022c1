// Copyright 2026 The sigmamp Authors
// SPDX-License-Identifier: Apache-2.0

#include "sigmamp/gf.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <utility>

#include "sigmamp/error.hpp"

namespace sigmamp {

namespace {

using Poly = std::vector<std::uint32_t>;  // low-to-high coefficients over F_p

// Residue-class product of two length-h residues modulo the monic polynomial f.
Poly mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
  const std::size_t h = f.size() - 1;
  std::vector<std::uint64_t> prod(2 * h, 0);
  for (std::size_t i = 0; i < h; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < h; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  }
  for (std::size_t d = 2 * h - 1; d-- > h;) {
    const std::uint64_t c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (std::size_t i = 0; i < h; ++i) prod[d - h + i] = (prod[d - h + i] + (p - c) * f[i]) % p;
  }
  return Poly(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(h));
}

Poly powmod(Poly base, std::uint64_t k, const Poly& f, std::uint32_t p) {
  const std::size_t h = f.size() - 1;
  Poly acc(h, 0);
  acc[0] = 1;
  while (k > 0) {
    if (k & 1u) acc = mulmod(acc, base, f, p);
    base = mulmod(base, base, f, p);
    k >>= 1u;
  }
  return acc;
}

// Remainder of a (arbitrary degree) by the monic polynomial g.
Poly polymod(Poly a, const Poly& g, std::uint32_t p) {
  const std::size_t dg = g.size() - 1;
  for (std::size_t d = a.size(); d-- > dg;) {
    const std::uint64_t c = a[d];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= dg; ++i) a[d - dg + i] = static_cast<std::uint32_t>((a[d - dg + i] + (p - c) * std::uint64_t{g[i]}) % p);
  }
  a.resize(std::min(a.size(), dg));
  return a;
}

// Trial division by every monic polynomial of degree 1..h/2.
bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t h = f.size() - 1;
  for (std::size_t d = 1; 2 * d <= h; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    Poly g(d + 1, 0);
    g[d] = 1;
    for (std::uint64_t c = 0; c < count; ++c) {
      std::uint64_t v = c;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      const Poly r = polymod(f, g, p);
      if (std::all_of(r.begin(), r.end(), [](std::uint32_t x) { return x == 0; })) return false;
    }
  }
  return true;
}

bool is_one(const Poly& a) {
  return a[0] == 1 && std::all_of(a.begin() + 1, a.end(), [](std::uint32_t x) { return x == 0; });
}

bool poly_is_primitive(const Poly& x, const Poly& f, std::uint32_t p, std::uint64_t q) {
  if (std::all_of(x.begin(), x.end(), [](std::uint32_t c) { return c == 0; })) return false;
  if (!is_one(powmod(x, q - 1, f, p))) return false;
  for (std::uint64_t r : prime_factors(q - 1))
    if (is_one(powmod(x, (q - 1) / r, f, p))) return false;
  return true;
}

// Conway polynomials, monic, low-to-high. Pinned so that "w^k" data is stable.
const std::map<std::pair<std::uint32_t, unsigned>, Poly>& conway_table() {
  static const std::map<std::pair<std::uint32_t, unsigned>, Poly> table = {
      {{2, 1}, {1, 1}},
      {{2, 2}, {1, 1, 1}},
      {{2, 3}, {1, 1, 0, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}},
      {{2, 5}, {1, 0, 1, 0, 0, 1}},
      {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
      {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
      {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
      {{3, 1}, {1, 1}},
      {{3, 2}, {2, 2, 1}},
      {{3, 3}, {1, 2, 0, 1}},
      {{3, 4}, {2, 0, 0, 2, 1}},
      {{3, 5}, {1, 2, 0, 0, 0, 1}},
      {{5, 1}, {3, 1}},
      {{5, 2}, {2, 4, 1}},
      {{5, 3}, {3, 3, 0, 1}},
      {{7, 1}, {4, 1}},
      {{7, 2}, {3, 6, 1}},
      {{11, 1}, {9, 1}},
      {{11, 2}, {2, 7, 1}},
      {{13, 1}, {11, 1}},
      {{13, 2}, {2, 12, 1}},
  };
  return table;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

GaloisParams GaloisParams::from(unsigned e, unsigned h) {
  if (h == 0 || e >= h) throw BadInput("Frobenius exponent e=" + std::to_string(e) + " outside [0, h)");
  GaloisParams g;
  g.e = e;
  g.r = (2 * e <= h) ? 2 * e : 2 * e - h;
  g.g = g.r == 0 ? h : std::gcd(g.r, h);
  return g;
}

struct Field::Impl {
  std::uint32_t p = 0;
  unsigned h = 0;
  std::uint32_t q = 0;
  Poly modulus;
  Elem omega;
  std::vector<std::uint32_t> pow_p;  // p^i for i < h

  mutable std::once_flag tables_once;
  mutable std::vector<std::uint32_t> exp;  // omega^k for k < 2(q-1)
  mutable std::vector<std::uint32_t> log;  // log[0] unused
  mutable std::vector<std::uint32_t> add;  // q*q table, odd p and q <= 256 only

  Poly unpack(std::uint32_t rep) const {
    Poly c(h, 0);
    for (unsigned i = 0; i < h; ++i) {
      c[i] = rep % p;
      rep /= p;
    }
    return c;
  }
  std::uint32_t pack(const Poly& c) const {
    std::uint32_t rep = 0;
    for (unsigned i = h; i-- > 0;) rep = rep * p + c[i];
    return rep;
  }
  std::uint32_t digit_add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t out = 0;
    for (unsigned i = 0; i < h; ++i) {
      const std::uint32_t s = (a % p + b % p) % p;
      out += s * pow_p[i];
      a /= p;
      b /= p;
    }
    return out;
  }
  void build_tables() const {
    std::call_once(tables_once, [this] {
      exp.assign(2 * static_cast<std::size_t>(q - 1), 0);
      log.assign(q, 0);
      const Poly w = unpack(omega.rep);
      Poly cur(h, 0);
      cur[0] = 1;
      for (std::uint32_t k = 0; k < q - 1; ++k) {
        const std::uint32_t rep = pack(cur);
        exp[k] = rep;
        exp[k + q - 1] = rep;
        log[rep] = k;
        cur = mulmod(cur, w, modulus, p);
      }
      if (p != 2 && q <= 256) {
        add.assign(static_cast<std::size_t>(q) * q, 0);
        for (std::uint32_t a = 0; a < q; ++a)
          for (std::uint32_t b = 0; b < q; ++b) add[a * q + b] = digit_add(a, b);
      }
    });
  }
};

Field Field::make(std::uint32_t p, unsigned h, std::optional<std::vector<std::uint32_t>> modulus,
                  std::optional<Elem> omega) {
  if (!is_prime(p)) throw BadInput("field characteristic " + std::to_string(p) + " is not prime");
  if (h == 0) throw BadInput("field degree must be positive");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < h; ++i) {
    q *= p;
    if (q > kMaxOrder)
      throw BadInput("field order " + std::to_string(p) + "^" + std::to_string(h) + " exceeds the 2^20 cap");
  }

  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->h = h;
  impl->q = static_cast<std::uint32_t>(q);
  impl->pow_p.resize(h);
  for (unsigned i = 0; i < h; ++i) impl->pow_p[i] = i == 0 ? 1 : impl->pow_p[i - 1] * p;

  Poly x(h, 0);
  if (h == 1) {
    x[0] = 0;  // filled below from the modulus root
  } else {
    x[1] = 1;
  }

  if (!modulus) modulus = default_modulus(p, h);
  if (!modulus) {
    // Smallest monic polynomial (by packed low coefficients) whose root is primitive.
    Poly f(h + 1, 0);
    f[h] = 1;
    for (std::uint64_t c = 1; c < q && !modulus; ++c) {
      std::uint64_t v = c;
      for (unsigned i = 0; i < h; ++i) {
        f[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      if (f[0] == 0) continue;
      Poly root = x;
      if (h == 1) root[0] = (p - f[0]) % p;
      if (is_irreducible(f, p) && poly_is_primitive(root, f, p, q)) modulus = f;
    }
  }

  const Poly& f = *modulus;
  if (f.size() != h + 1 || f[h] != 1) throw BadInput("modulus must be monic of degree " + std::to_string(h));
  if (std::any_of(f.begin(), f.end(), [p](std::uint32_t c) { return c >= p; }))
    throw BadInput("modulus coefficients must lie in [0, p)");
  if (!is_irreducible(f, p)) throw BadInput("modulus is reducible over F_" + std::to_string(p));
  impl->modulus = f;

  if (h == 1) x[0] = (p - f[0]) % p;
  const Poly w = omega ? impl->unpack(omega->rep) : x;
  if (omega && omega->rep >= q) throw BadInput("omega is not an element of the field");
  if (!poly_is_primitive(w, f, p, q)) throw BadInput("omega is not a primitive element");
  impl->omega = Elem{impl->pack(w)};
  return Field(std::move(impl));
}

std::optional<std::vector<std::uint32_t>> Field::default_modulus(std::uint32_t p, unsigned h) {
  const auto& t = conway_table();
  auto it = t.find({p, h});
  if (it == t.end()) return std::nullopt;
  return it->second;
}

std::uint32_t Field::characteristic() const { return impl_->p; }
unsigned Field::degree() const { return impl_->h; }
std::uint32_t Field::order() const { return impl_->q; }
const std::vector<std::uint32_t>& Field::modulus() const { return impl_->modulus; }
Elem Field::omega() const { return impl_->omega; }

Elem Field::constant(std::int64_t k) const {
  const std::int64_t p = impl_->p;
  return Elem{static_cast<std::uint32_t>(((k % p) + p) % p)};
}

Elem Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() != impl_->h) throw BadInput("element needs exactly h coefficients");
  for (std::uint32_t c : coeffs)
    if (c >= impl_->p) throw BadInput("element coefficient outside [0, p)");
  return Elem{impl_->pack(Poly(coeffs.begin(), coeffs.end()))};
}

std::vector<std::uint32_t> Field::coeffs(Elem x) const { return impl_->unpack(x.rep); }

Elem Field::add(Elem a, Elem b) const {
  if (impl_->p == 2) return Elem{a.rep ^ b.rep};
  if (impl_->h == 1) return Elem{(a.rep + b.rep) % impl_->p};
  impl_->build_tables();
  if (!impl_->add.empty()) return Elem{impl_->add[a.rep * impl_->q + b.rep]};
  return Elem{impl_->digit_add(a.rep, b.rep)};
}

Elem Field::neg(Elem a) const {
  if (impl_->p == 2) return a;
  std::uint32_t out = 0;
  std::uint32_t v = a.rep;
  for (unsigned i = 0; i < impl_->h; ++i) {
    const std::uint32_t d = v % impl_->p;
    out += ((impl_->p - d) % impl_->p) * impl_->pow_p[i];
    v /= impl_->p;
  }
  return Elem{out};
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const {
  if (a.is_zero() || b.is_zero()) return Elem{0};
  impl_->build_tables();
  return Elem{impl_->exp[impl_->log[a.rep] + impl_->log[b.rep]]};
}

Elem Field::inv(Elem a) const {
  if (a.is_zero()) throw BadInput("inversion of zero");
  impl_->build_tables();
  const std::uint32_t l = impl_->log[a.rep];
  return Elem{impl_->exp[l == 0 ? 0 : impl_->q - 1 - l]};
}

Elem Field::div(Elem a, Elem b) const { return mul(a, inv(b)); }

Elem Field::pow(Elem a, std::int64_t k) const {
  if (a.is_zero()) {
    if (k < 0) throw BadInput("negative power of zero");
    return k == 0 ? one() : zero();
  }
  impl_->build_tables();
  const std::int64_t m = impl_->q - 1;
  const std::int64_t l = (static_cast<std::int64_t>(impl_->log[a.rep]) * (((k % m) + m) % m)) % m;
  return Elem{impl_->exp[static_cast<std::size_t>(l)]};
}

Elem Field::frobenius(Elem a, unsigned e) const {
  e %= impl_->h;
  if (e == 0 || a.is_zero()) return a;
  std::int64_t pe = 1;
  for (unsigned i = 0; i < e; ++i) pe *= impl_->p;
  return pow(a, pe);
}

Elem Field::omega_pow(std::int64_t k) const {
  impl_->build_tables();
  const std::int64_t m = impl_->q - 1;
  return Elem{impl_->exp[static_cast<std::size_t>(((k % m) + m) % m)]};
}

std::uint32_t Field::log(Elem a) const {
  if (a.is_zero()) throw BadInput("logarithm of zero");
  impl_->build_tables();
  return impl_->log[a.rep];
}

bool Field::is_primitive(Elem a) const {
  if (a.is_zero()) return false;
  return std::gcd(log(a), impl_->q - 1) == 1;
}

bool Field::in_subfield(Elem x, unsigned g) const {
  if (g == 0 || impl_->h % g != 0)
    throw BadInput("subfield degree " + std::to_string(g) + " does not divide " + std::to_string(impl_->h));
  return frobenius(x, g) == x;
}

std::vector<Elem> Field::subfield_elements(unsigned g) const {
  std::vector<Elem> out;
  for (std::uint32_t r = 0; r < impl_->q; ++r)
    if (in_subfield(Elem{r}, g)) out.push_back(Elem{r});
  return out;
}

std::string Field::to_string(Elem x) const {
  if (x.is_zero()) return "0";
  return "w^" + std::to_string(log(x));
}

std::string Field::name() const {
  return "GF(" + std::to_string(impl_->p) + "^" + std::to_string(impl_->h) + ")";
}

bool operator==(const Field& a, const Field& b) {
  if (a.impl_ == b.impl_) return true;
  return a.impl_->p == b.impl_->p && a.impl_->h == b.impl_->h && a.impl_->modulus == b.impl_->modulus;
}

Element::Element(Field field, Elem value) : field_(std::move(field)), value_(value) {
  if (!field_.contains(value_)) throw BadInput("element representation outside the field");
}

const Field& Element::same_field(const Element& o) const {
  if (!(field_ == o.field_)) throw BadInput("operands belong to different fields");
  return field_;
}

Element Element::operator+(const Element& o) const { return {same_field(o), field_.add(value_, o.value_)}; }
Element Element::operator-(const Element& o) const { return {same_field(o), field_.sub(value_, o.value_)}; }
Element Element::operator*(const Element& o) const { return {same_field(o), field_.mul(value_, o.value_)}; }
Element Element::operator/(const Element& o) const { return {same_field(o), field_.div(value_, o.value_)}; }
Element Element::operator-() const { return {field_, field_.neg(value_)}; }
Element Element::inv() const { return {field_, field_.inv(value_)}; }
Element Element::pow(std::int64_t k) const { return {field_, field_.pow(value_, k)}; }
Element Element::frobenius(unsigned e) const { return {field_, field_.frobenius(value_, e)}; }

bool operator==(const Element& a, const Element& b) { return a.field_ == b.field_ && a.value_ == b.value_; }

}  // namespace sigmamp
