#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "fourp/rational.hpp"

namespace fourp {

// Hard cap on table limits.  Beyond this the 32-bit columns (phi, rad(n),
// and the product of (p+1) over distinct p | n, which stays below 3.75*n)
// would no longer be guaranteed to fit.  Practical limits are much lower:
// the six columns cost ~19 bytes per entry, so N = 1e7 needs ~190 MB and
// N = 1e8 about 1.9 GB.
inline constexpr std::uint32_t kMaxTableLimit = 1'000'000'000;

// Smallest-prime-factor table for 2 <= n <= limit, built by a linear
// (Euler) sieve.  spf(n) is prime, divides n, and spf(p) == p exactly for
// primes.  Factorization via repeated spf division is O(log n).
class FactorSieve {
 public:
  explicit FactorSieve(std::uint32_t limit);

  std::uint32_t limit() const { return limit_; }
  std::uint32_t spf(std::uint32_t n) const;
  bool is_prime(std::uint32_t n) const { return n >= 2 && spf(n) == n; }
  const std::vector<std::uint32_t>& primes() const { return primes_; }

  // (prime, exponent) pairs in ascending prime order; empty for n = 1.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> factor(
      std::uint32_t n) const;

 private:
  friend class ArithTables;
  FactorSieve() : limit_(0) {}

  std::uint32_t limit_;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint32_t> primes_;
};

// phi(n), d(n), the squarefree indicator mu^2(n) and the exact value of
// g(n) = prod_{p|n} (1 + 1/p) for all 1 <= n <= limit, filled in one
// linear-sieve pass.  g is stored as the product pair
// (prod (p+1), prod p) over distinct primes; the pair is not reduced
// (its denominator is rad(n)), the g() accessor returns the canonical
// rational value.
class ArithTables {
 public:
  static ArithTables build(std::uint32_t limit);

  std::uint32_t limit() const { return sieve_.limit(); }
  const FactorSieve& sieve() const { return sieve_; }

  std::uint64_t phi(std::uint32_t n) const;
  std::uint32_t divisor_count(std::uint32_t n) const;
  bool squarefree(std::uint32_t n) const;
  std::uint32_t g_num(std::uint32_t n) const;  // prod (p+1) over distinct p|n
  std::uint32_t g_den(std::uint32_t n) const;  // rad(n)
  Rational g(std::uint32_t n) const;           // canonical value of g(n)
  double g_float(std::uint32_t n) const;

 private:
  ArithTables() = default;
  void check_range(std::uint32_t n) const;

  FactorSieve sieve_;
  std::vector<std::uint32_t> phi_;
  std::vector<std::uint16_t> d_;
  std::vector<std::uint8_t> mu2_;
  std::vector<std::uint32_t> g_num_;
  std::vector<std::uint32_t> g_den_;
};

inline ArithTables build_tables(std::uint32_t limit) {
  return ArithTables::build(limit);
}

// Sum over the divisors d of n of mu^2(d)/d, as an exact rational.  Equals
// the product form stored in the tables; the two routes are cross-checked
// in tests.
Rational g_divisor_form(std::uint32_t n, const ArithTables& tables);

// phi(n) * g(n) / n, exactly.  Expanding the product shows this equals
// prod_{p|n} (1 - 1/p^2), so the value lies in (6/pi^2, 1] with equality
// to 1 only at n = 1.
Rational lemma1_ratio(std::uint32_t n, const ArithTables& tables);

// Sum of 1/phi(n) over x < n <= 2x, accumulated in ascending n order.
double lemma2_window_sum(std::uint64_t x, const ArithTables& tables);

}  // namespace fourp
