// Copyright 2026 The sigmamp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sigmamp/isometry.hpp"
#include "sigmamp/matrix.hpp"

namespace sigmamp {

/// Linear code given by a full-rank generator kept in reduced row-echelon
/// form, so equal codes have equal generators.
class LinearCode {
 public:
  /// The zero code of length n.
  LinearCode(Field field, std::size_t n);
  /// Row space of `g`; dependent rows are allowed.
  static LinearCode from_generator(const Matrix& g);

  const Field& field() const { return gen_.field(); }
  std::size_t length() const { return gen_.cols(); }
  std::size_t dimension() const { return gen_.rows(); }
  const Matrix& generator() const { return gen_; }

  bool contains(std::span<const Elem> v) const;
  bool contains(const LinearCode& other) const;

  friend bool operator==(const LinearCode& a, const LinearCode& b) { return a.gen_ == b.gen_; }

 private:
  explicit LinearCode(Rref r) : gen_(std::move(r.reduced)), pivots_(std::move(r.pivots)) {}
  Matrix gen_;
  std::vector<std::size_t> pivots_;
};

/// Code spanned by the rows of G * m.
LinearCode transform(const LinearCode& c, const Matrix& m);
/// sigma(C), spanned by pi_e(G) M_tau.
LinearCode image(const LinearCode& c, const Isometry& sigma);

LinearCode euclidean_dual(const LinearCode& c);
/// C^{perp sigma} = sigma(C)^{perp E}.
LinearCode sigma_dual(const LinearCode& c, const Isometry& sigma);
/// Compares sigma(C)^{perp E} with sigma(C^{perp E}) (M_tau^T M_tau)^{-1}.
bool sigma_euclidean_identity_holds(const LinearCode& c, const Isometry& sigma);

bool is_self_orthogonal(const LinearCode& c, const Isometry& sigma);
bool is_dual_containing(const LinearCode& c, const Isometry& sigma);

LinearCode intersect(const LinearCode& a, const LinearCode& b);
LinearCode sum(const LinearCode& a, const LinearCode& b);

// ---------------------------------------------------------------------------
// Weights and distance.

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;
inline constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

struct EnumerationOptions {
  std::uint64_t budget = kDefaultBudget;  // max codewords visited in one enumeration
  unsigned threads = 1;
};

struct WeightEnumerator {
  std::vector<BigInt> counts;  // counts[w] = number of codewords of weight w

  /// Smallest nonzero weight present, or kUnbounded for the zero code.
  std::size_t min_nonzero_weight() const;
  BigInt total() const;
  friend bool operator==(const WeightEnumerator&, const WeightEnumerator&) = default;
};

/// q^k as a saturating 64-bit count.
std::uint64_t code_size(std::uint64_t q, std::size_t k);

/// Exact enumerator by visiting every codeword. Shards are message prefixes;
/// the result does not depend on the thread count.
WeightEnumerator weight_enumerator(const LinearCode& c, const EnumerationOptions& opts = {});

/// Enumerator of C from that of its Euclidean dual C^{perp} (dimension n - k).
/// Throws VerificationFailed on a non-integral or negative coefficient.
WeightEnumerator macwilliams(const WeightEnumerator& dual, std::size_t n, std::size_t k, std::uint64_t q);

enum class DistanceStrategy { trivial, direct, macwilliams };
std::string to_string(DistanceStrategy s);

struct DistanceReport {
  std::size_t d = kUnbounded;
  DistanceStrategy strategy = DistanceStrategy::trivial;
  WeightEnumerator enumerator;
};

/// Exact minimum distance, enumerating C directly when q^k fits the budget and
/// otherwise enumerating C^{perp E} and transforming. BudgetExceeded when
/// neither side fits.
DistanceReport min_distance(const LinearCode& c, const EnumerationOptions& opts = {});

}  // namespace sigmamp
