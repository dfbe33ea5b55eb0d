#pragma once

// Exact integer / rational arithmetic and the memoized factorial, binomial
// and multinomial coefficients shared by every other header.

#include <cstddef>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace geuler {

/// Arbitrary-precision signed integer. GMP keeps zero canonical.
using Integer = mpz_class;

/// Exact fraction. GMP arithmetic on mpq_class always yields canonical form
/// (positive denominator, reduced), so no explicit normalization is needed
/// after operations; make_rational() canonicalizes freshly assembled values.
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Raised whenever a brute-force enumeration would exceed its configured cap.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what, Integer required, std::uint64_t cap)
      : std::runtime_error(what + ": requires " + required.get_str() +
                           ", cap is " + std::to_string(cap)),
        required_(std::move(required)),
        cap_(cap) {}

  const Integer& required() const { return required_; }
  std::uint64_t cap() const { return cap_; }

 private:
  Integer required_;
  std::uint64_t cap_;
};

/// Default cap on brute-force enumeration sizes.
inline constexpr std::uint64_t kDefaultCap = 10'000'000;

/// Monotonically growing table of k!, table[k] = k * table[k-1].
/// Readers share the lock; growth is serialized.
class FactorialCache {
 public:
  FactorialCache() : table_{Integer(1)} {}

  Integer get(std::size_t n) {
    {
      std::shared_lock lock(mutex_);
      if (n < table_.size()) return table_[n];
    }
    std::unique_lock lock(mutex_);
    table_.reserve(n + 1);
    while (table_.size() <= n) {
      Integer next = table_.back() * static_cast<unsigned long>(table_.size());
      table_.push_back(std::move(next));
    }
    return table_[n];
  }

  std::size_t max_n() const {
    std::shared_lock lock(mutex_);
    return table_.size() - 1;
  }

  static FactorialCache& global() {
    static FactorialCache cache;
    return cache;
  }

 private:
  mutable std::shared_mutex mutex_;
  std::vector<Integer> table_;
};

inline Integer factorial(std::size_t n) { return FactorialCache::global().get(n); }

/// C(n, k); zero when k > n.
inline Integer binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

/// n! / prod(parts[i]!). Throws std::invalid_argument unless sum(parts) == n.
inline Integer multinomial(std::size_t n, std::span<const std::size_t> parts) {
  const std::size_t total = std::accumulate(parts.begin(), parts.end(), std::size_t{0});
  if (total != n)
    throw std::invalid_argument("multinomial: parts sum to " + std::to_string(total) +
                                ", expected " + std::to_string(n));
  Integer denom = 1;
  for (std::size_t part : parts) denom *= factorial(part);
  Integer r = factorial(n);
  mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), denom.get_mpz_t());
  return r;
}

inline Integer multinomial(std::size_t n, std::initializer_list<std::size_t> parts) {
  return multinomial(n, std::span<const std::size_t>(parts.begin(), parts.size()));
}

/// Trial division. Only used to validate tiny prime parameters.
constexpr bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

/// Least nonnegative residue of a modulo m (m > 0).
inline Integer residue(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

/// a == b (mod m), tested as m | (a - b).
inline bool congruent(const Integer& a, const Integer& b, const Integer& m) {
  const Integer diff = a - b;
  return mpz_divisible_p(diff.get_mpz_t(), m.get_mpz_t()) != 0;
}

inline int sign_of(const Integer& a) { return sgn(a); }

inline std::string to_string(const Integer& a) { return a.get_str(); }
inline std::string to_string(const Rational& a) { return a.get_str(); }

}  // namespace geuler
