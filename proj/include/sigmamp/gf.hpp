// Copyright 2026 The sigmamp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sigmamp {

/// A field element in packed power-basis form.
///
/// `rep` holds the coefficient vector (c_0, ..., c_{h-1}) of the element with
/// respect to the basis 1, x, ..., x^{h-1} of F_p[x]/(modulus), packed as
/// c_0 + c_1 p + ... + c_{h-1} p^{h-1}. Zero is rep 0 and one is rep 1.
/// An Elem carries no field; the owning Field interprets it.
struct Elem {
  std::uint32_t rep = 0;

  constexpr bool is_zero() const noexcept { return rep == 0; }
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

/// Exponents attached to a Frobenius exponent e in GF(p^h):
/// r = 2e for e <= h/2, r = 2e - h otherwise; g = gcd(r, h) with gcd(0, h) = h.
struct GaloisParams {
  unsigned e = 0;
  unsigned r = 0;
  unsigned g = 0;

  static GaloisParams from(unsigned e, unsigned h);
};

/// GF(p^h) with a fixed modulus polynomial and distinguished primitive element.
///
/// Field is a cheap shared handle to immutable data; copies refer to the same
/// field. Log/antilog tables are built on first use under std::call_once, so a
/// Field may be shared across threads freely.
class Field {
 public:
  /// Largest supported order p^h.
  static constexpr std::uint32_t kMaxOrder = 1u << 20;

  /// Builds GF(p^h). `modulus` is monic, low-to-high, length h + 1. Without a
  /// modulus the pinned default table (Conway polynomials) is used, falling
  /// back to the smallest polynomial whose root is primitive. `omega` defaults
  /// to the class of x. Throws BadInput on a non-prime p, a reducible modulus,
  /// or a non-primitive omega.
  static Field make(std::uint32_t p, unsigned h,
                    std::optional<std::vector<std::uint32_t>> modulus = std::nullopt,
                    std::optional<Elem> omega = std::nullopt);

  /// The pinned default modulus for (p, h), if the table has one.
  static std::optional<std::vector<std::uint32_t>> default_modulus(std::uint32_t p, unsigned h);

  std::uint32_t characteristic() const;
  unsigned degree() const;
  std::uint32_t order() const;
  const std::vector<std::uint32_t>& modulus() const;
  Elem omega() const;

  Elem zero() const { return Elem{0}; }
  Elem one() const { return Elem{1}; }
  /// The prime-subfield element k mod p.
  Elem constant(std::int64_t k) const;
  Elem from_coeffs(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(Elem x) const;
  bool contains(Elem x) const { return x.rep < order(); }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const;
  /// Exponent taken mod p^h - 1 for nonzero base; 0^0 = 1; 0^k for k < 0 throws.
  Elem pow(Elem a, std::int64_t k) const;
  /// pi_e(x) = x^(p^e), e reduced mod h.
  Elem frobenius(Elem a, unsigned e) const;

  /// omega^k, k reduced mod p^h - 1.
  Elem omega_pow(std::int64_t k) const;
  /// Discrete log to base omega. Throws on zero.
  std::uint32_t log(Elem a) const;
  bool is_primitive(Elem a) const;

  /// True iff x lies in the subfield F_{p^g}; g must divide h.
  bool in_subfield(Elem x, unsigned g) const;
  std::vector<Elem> subfield_elements(unsigned g) const;

  /// "0" or "w^k".
  std::string to_string(Elem x) const;
  /// Short descriptor such as "GF(3^4)".
  std::string name() const;

  friend bool operator==(const Field& a, const Field& b);

 private:
  struct Impl;
  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Field element bound to its field, for scalar arithmetic with operators.
/// Mixing elements of different fields throws BadInput.
class Element {
 public:
  Element(Field field, Elem value);

  const Field& field() const { return field_; }
  Elem value() const { return value_; }

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator*(const Element& o) const;
  Element operator/(const Element& o) const;
  Element operator-() const;
  Element inv() const;
  Element pow(std::int64_t k) const;
  Element frobenius(unsigned e) const;

  friend bool operator==(const Element& a, const Element& b);

 private:
  const Field& same_field(const Element& o) const;
  Field field_;
  Elem value_;
};

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

}  // namespace sigmamp
