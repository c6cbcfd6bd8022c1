// Copyright 2026 The sigmamp Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <atomic>
#include <thread>

#include "sigmamp/codes.hpp"
#include "sigmamp/error.hpp"

namespace sigmamp {

namespace {

// Shards are fixed by the code alone so the merged histogram cannot depend on
// how many workers pick them up.
constexpr std::uint64_t kMinShards = 64;

struct Kernel {
  const Field* f;
  bool binary;
  std::size_t n;
  std::vector<Vec> rows;                          // F_p-basis of the code
  std::vector<std::vector<std::size_t>> support;  // nonzero positions of each row

  // Histogram over all F_p-combinations of rows[0..low) added to `start`.
  // Digit j changes at step t when j is the lowest nonzero base-p digit of t;
  // bumping that digit by one is a modular Gray code over F_p^low.
  void run(Vec word, std::size_t low, std::uint32_t p, std::vector<std::uint64_t>& hist) const {
    std::size_t w = hamming_weight(word);
    ++hist[w];
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < low; ++i) total *= p;
    for (std::uint64_t t = 1; t < total; ++t) {
      std::uint64_t x = t;
      std::size_t j = 0;
      while (x % p == 0) {
        x /= p;
        ++j;
      }
      const Vec& r = rows[j];
      for (std::size_t pos : support[j]) {
        const Elem old = word[pos];
        const Elem now = binary ? Elem{old.rep ^ r[pos].rep} : f->add(old, r[pos]);
        word[pos] = now;
        w += static_cast<std::size_t>(!now.is_zero()) - static_cast<std::size_t>(!old.is_zero());
      }
      ++hist[w];
    }
  }
};

BigInt binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  BigInt r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::size_t WeightEnumerator::min_nonzero_weight() const {
  for (std::size_t w = 1; w < counts.size(); ++w)
    if (counts[w] != 0) return w;
  return kUnbounded;
}

BigInt WeightEnumerator::total() const {
  BigInt t = 0;
  for (const BigInt& c : counts) t += c;
  return t;
}

std::uint64_t code_size(std::uint64_t q, std::size_t k) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / q) return std::numeric_limits<std::uint64_t>::max();
    r *= q;
  }
  return r;
}

WeightEnumerator weight_enumerator(const LinearCode& c, const EnumerationOptions& opts) {
  const Field& f = c.field();
  const std::size_t n = c.length();
  const std::size_t k = c.dimension();
  const std::uint64_t size = code_size(f.order(), k);
  if (size > opts.budget)
    throw BudgetExceeded("enumerating " + std::to_string(f.order()) + "^" + std::to_string(k) +
                         " codewords exceeds the enumeration budget (--budget / SMP_BUDGET = " +
                         std::to_string(opts.budget) + ")");
  const std::uint32_t p = f.characteristic();
  const unsigned h = f.degree();

  Kernel kern{&f, p == 2, n, {}, {}};
  std::uint32_t scale = 1;
  for (unsigned b = 0; b < h; ++b, scale *= p)
    for (std::size_t i = 0; i < k; ++i) {
      Vec r(n);
      std::vector<std::size_t> supp;
      for (std::size_t j = 0; j < n; ++j) {
        r[j] = f.mul(Elem{scale}, c.generator()(i, j));
        if (!r[j].is_zero()) supp.push_back(j);
      }
      kern.rows.push_back(std::move(r));
      kern.support.push_back(std::move(supp));
    }
  const std::size_t digits = kern.rows.size();

  std::size_t top = 0;
  std::uint64_t shards = 1;
  while (top < digits && shards < kMinShards) {
    ++top;
    shards *= p;
  }
  const std::size_t low = digits - top;

  std::vector<std::vector<std::uint64_t>> per_shard(shards);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t s = next++; s < shards; s = next++) {
      Vec start(n, Elem{0});
      std::uint64_t x = s;
      for (std::size_t d = 0; d < top; ++d, x /= p) {
        const std::uint32_t digit = static_cast<std::uint32_t>(x % p);
        const Vec& r = kern.rows[low + d];
        for (std::uint32_t rep = 0; rep < digit; ++rep)
          for (std::size_t j = 0; j < n; ++j) start[j] = f.add(start[j], r[j]);
      }
      std::vector<std::uint64_t> hist(n + 1, 0);
      kern.run(std::move(start), low, p, hist);
      per_shard[s] = std::move(hist);
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(shards)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  WeightEnumerator out{std::vector<BigInt>(n + 1, 0)};
  for (const auto& hist : per_shard)
    for (std::size_t w = 0; w <= n; ++w) out.counts[w] += hist[w];
  return out;
}

WeightEnumerator macwilliams(const WeightEnumerator& dual, std::size_t n, std::size_t k, std::uint64_t q) {
  if (dual.counts.size() != n + 1) throw BadInput("dual enumerator length does not match n");
  if (k > n) throw BadInput("code dimension exceeds length");
  BigInt dual_size = 1;
  for (std::size_t i = 0; i < n - k; ++i) dual_size *= q;
  if (dual.total() != dual_size)
    throw VerificationFailed("dual enumerator does not sum to q^(n-k)");

  std::vector<std::vector<BigInt>> binom(n + 1, std::vector<BigInt>(n + 1, 0));
  for (std::size_t a = 0; a <= n; ++a)
    for (std::size_t b = 0; b <= a; ++b) binom[a][b] = binomial(a, b);
  std::vector<BigInt> qm1_pow(n + 1, 1);
  for (std::size_t i = 1; i <= n; ++i) qm1_pow[i] = qm1_pow[i - 1] * (q - 1);

  WeightEnumerator out{std::vector<BigInt>(n + 1, 0)};
  for (std::size_t j = 0; j <= n; ++j) {
    BigInt acc = 0;
    for (std::size_t i = 0; i <= n; ++i) {
      if (dual.counts[i] == 0) continue;
      // Krawtchouk K_j(i) = sum_l (-1)^l (q-1)^(j-l) C(i,l) C(n-i, j-l).
      BigInt kraw = 0;
      for (std::size_t l = 0; l <= std::min(i, j); ++l) {
        if (j - l > n - i) continue;
        BigInt term = qm1_pow[j - l] * binom[i][l] * binom[n - i][j - l];
        if (l % 2) kraw -= term;
        else kraw += term;
      }
      acc += dual.counts[i] * kraw;
    }
    if (acc < 0 || acc % dual_size != 0)
      throw VerificationFailed("MacWilliams transform gave a non-integral or negative count at weight " +
                               std::to_string(j));
    out.counts[j] = acc / dual_size;
  }
  return out;
}

std::string to_string(DistanceStrategy s) {
  switch (s) {
    case DistanceStrategy::trivial:
      return "trivial";
    case DistanceStrategy::direct:
      return "direct";
    case DistanceStrategy::macwilliams:
      return "macwilliams";
  }
  return "unknown";
}

DistanceReport min_distance(const LinearCode& c, const EnumerationOptions& opts) {
  const std::uint64_t q = c.field().order();
  const std::size_t n = c.length();
  const std::size_t k = c.dimension();
  DistanceReport rep;
  if (k == 0) {
    rep.enumerator.counts.assign(n + 1, 0);
    rep.enumerator.counts[0] = 1;
    return rep;
  }
  if (code_size(q, k) <= opts.budget) {
    rep.enumerator = weight_enumerator(c, opts);
    rep.strategy = DistanceStrategy::direct;
  } else if (code_size(q, n - k) <= opts.budget) {
    rep.enumerator = macwilliams(weight_enumerator(euclidean_dual(c), opts), n, k, q);
    rep.strategy = DistanceStrategy::macwilliams;
  } else {
    throw BudgetExceeded("neither the code (" + std::to_string(q) + "^" + std::to_string(k) + ") nor its dual (" +
                         std::to_string(q) + "^" + std::to_string(n - k) +
                         ") fits the enumeration budget (--budget / SMP_BUDGET = " + std::to_string(opts.budget) +
                         "); only bounds are available");
  }
  rep.d = rep.enumerator.min_nonzero_weight();
  return rep;
}

}  // namespace sigmamp
