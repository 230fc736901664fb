#include "fourp/multiplicative.hpp"

#include <stdexcept>
#include <string>

namespace fourp {

namespace {

void check_build_limit(std::uint32_t limit) {
  if (limit < 2)
    throw std::invalid_argument("table limit must be at least 2, got " +
                                std::to_string(limit));
  if (limit > kMaxTableLimit)
    throw std::length_error("table limit " + std::to_string(limit) +
                            " exceeds the sizing cap " +
                            std::to_string(kMaxTableLimit));
}

}  // namespace

FactorSieve::FactorSieve(std::uint32_t limit) : limit_(limit) {
  check_build_limit(limit);
  spf_.assign(static_cast<std::size_t>(limit) + 1, 0);
  for (std::uint32_t i = 2; i <= limit; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = i;
      primes_.push_back(i);
    }
    for (std::uint32_t p : primes_) {
      if (p > spf_[i] || p > limit / i) break;
      spf_[i * p] = p;
    }
  }
}

std::uint32_t FactorSieve::spf(std::uint32_t n) const {
  if (n < 2 || n > limit_)
    throw std::out_of_range("spf: n = " + std::to_string(n) +
                            " outside [2, " + std::to_string(limit_) + "]");
  return spf_[n];
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> FactorSieve::factor(
    std::uint32_t n) const {
  if (n < 1 || n > limit_)
    throw std::out_of_range("factor: n = " + std::to_string(n) +
                            " outside [1, " + std::to_string(limit_) + "]");
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  while (n > 1) {
    const std::uint32_t p = spf_[n];
    std::uint32_t e = 0;
    do {
      n /= p;
      ++e;
    } while (n % p == 0);
    out.emplace_back(p, e);
  }
  return out;
}

ArithTables ArithTables::build(std::uint32_t limit) {
  check_build_limit(limit);
  ArithTables t;
  const std::size_t size = static_cast<std::size_t>(limit) + 1;

  t.sieve_.limit_ = limit;
  auto& spf = t.sieve_.spf_;
  auto& primes = t.sieve_.primes_;
  spf.assign(size, 0);

  t.phi_.assign(size, 0);
  t.d_.assign(size, 0);
  t.mu2_.assign(size, 0);
  t.g_num_.assign(size, 0);
  t.g_den_.assign(size, 0);
  // exponent of spf(i) in i, needed for the d(n) recurrence
  std::vector<std::uint8_t> cnt(size, 0);

  t.phi_[1] = 1;
  t.d_[1] = 1;
  t.mu2_[1] = 1;
  t.g_num_[1] = 1;
  t.g_den_[1] = 1;

  for (std::uint32_t i = 2; i <= limit; ++i) {
    if (spf[i] == 0) {
      spf[i] = i;
      primes.push_back(i);
      t.phi_[i] = i - 1;
      t.d_[i] = 2;
      t.mu2_[i] = 1;
      t.g_num_[i] = i + 1;
      t.g_den_[i] = i;
      cnt[i] = 1;
    }
    for (std::uint32_t p : primes) {
      if (p > spf[i] || p > limit / i) break;
      const std::uint32_t m = i * p;
      spf[m] = p;
      if (p == spf[i]) {
        t.phi_[m] = t.phi_[i] * p;
        t.d_[m] = static_cast<std::uint16_t>(t.d_[i] / (cnt[i] + 1u) *
                                             (cnt[i] + 2u));
        t.mu2_[m] = 0;
        t.g_num_[m] = t.g_num_[i];
        t.g_den_[m] = t.g_den_[i];
        cnt[m] = cnt[i] + 1;
        break;
      }
      t.phi_[m] = t.phi_[i] * (p - 1);
      t.d_[m] = static_cast<std::uint16_t>(t.d_[i] * 2u);
      t.mu2_[m] = t.mu2_[i];
      t.g_num_[m] = t.g_num_[i] * (p + 1);
      t.g_den_[m] = t.g_den_[i] * p;
      cnt[m] = 1;
    }
  }
  return t;
}

void ArithTables::check_range(std::uint32_t n) const {
  if (n < 1 || n > limit())
    throw std::out_of_range("tables: n = " + std::to_string(n) +
                            " outside [1, " + std::to_string(limit()) + "]");
}

std::uint64_t ArithTables::phi(std::uint32_t n) const {
  check_range(n);
  return phi_[n];
}

std::uint32_t ArithTables::divisor_count(std::uint32_t n) const {
  check_range(n);
  return d_[n];
}

bool ArithTables::squarefree(std::uint32_t n) const {
  check_range(n);
  return mu2_[n] != 0;
}

std::uint32_t ArithTables::g_num(std::uint32_t n) const {
  check_range(n);
  return g_num_[n];
}

std::uint32_t ArithTables::g_den(std::uint32_t n) const {
  check_range(n);
  return g_den_[n];
}

Rational ArithTables::g(std::uint32_t n) const {
  check_range(n);
  return Rational(g_num_[n], g_den_[n]);
}

double ArithTables::g_float(std::uint32_t n) const {
  check_range(n);
  return static_cast<double>(g_num_[n]) / static_cast<double>(g_den_[n]);
}

Rational g_divisor_form(std::uint32_t n, const ArithTables& tables) {
  if (n < 1 || n > tables.limit())
    throw std::out_of_range("g_divisor_form: n = " + std::to_string(n) +
                            " outside [1, " + std::to_string(tables.limit()) +
                            "]");
  // Enumerate all divisors of n from its factorization, keep the squarefree
  // ones.  Divisors come out unordered; the rational sum is exact so the
  // order does not matter.
  const auto factors = tables.sieve().factor(n);
  std::vector<std::uint32_t> divisors{1};
  for (const auto& [p, e] : factors) {
    const std::size_t base = divisors.size();
    std::uint64_t pk = 1;
    for (std::uint32_t k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i)
        divisors.push_back(static_cast<std::uint32_t>(divisors[i] * pk));
    }
  }
  Rational sum;
  for (std::uint32_t d : divisors)
    if (tables.squarefree(d)) sum += Rational(1, d);
  return sum;
}

Rational lemma1_ratio(std::uint32_t n, const ArithTables& tables) {
  if (n < 1 || n > tables.limit())
    throw std::out_of_range("lemma1_ratio: n = " + std::to_string(n) +
                            " outside [1, " + std::to_string(tables.limit()) +
                            "]");
  // phi(n) * g_num / (n * g_den); both products fit int64 for any
  // n <= kMaxTableLimit.
  const std::int64_t num =
      static_cast<std::int64_t>(tables.phi(n)) * tables.g_num(n);
  const std::int64_t den = static_cast<std::int64_t>(n) * tables.g_den(n);
  return Rational(num, den);
}

double lemma2_window_sum(std::uint64_t x, const ArithTables& tables) {
  if (x < 1) throw std::invalid_argument("lemma2_window_sum: x must be >= 1");
  if (2 * x > tables.limit())
    throw std::out_of_range("lemma2_window_sum: 2x = " + std::to_string(2 * x) +
                            " exceeds table limit " +
                            std::to_string(tables.limit()));
  double sum = 0.0;
  for (std::uint64_t n = x + 1; n <= 2 * x; ++n)
    sum += 1.0 / static_cast<double>(tables.phi(static_cast<std::uint32_t>(n)));
  return sum;
}

}  // namespace fourp
