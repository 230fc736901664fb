#include "fourp/experiments.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "fourp/parallel.hpp"
#include "fourp/prime_sieve.hpp"
#include "fourp/solver.hpp"

namespace fourp {

namespace {

using u64 = std::uint64_t;

void check_x(u64 x, const char* where) {
  if (x < 3)
    throw std::invalid_argument(std::string(where) + ": x must be >= 3, got " +
                                std::to_string(x));
}

}  // namespace

u64 sum_f2_per_prime(u64 x, int threads) {
  check_x(x, "sum_f2_per_prime");
  const PrimeSieve sieve(x);
  const auto primes = sieve.primes();
  const detail::CoprimeMasks masks(detail::lemma3_half_scan_a_max(x));
  const u64 triples = parallel_sum(primes.size(), threads, [&](std::size_t i) {
    return detail::lemma3_count_congruence(primes[i], masks);
  });
  return 3 * triples;
}

u64 sum_f2_progression(u64 x, int threads) {
  check_x(x, "sum_f2_progression");
  const PrimeSieve sieve(x);
  // 4ab - a - b <= x with b >= 1 forces 3a - 1 <= x, i.e. a <= (x+1)/3.
  const u64 a_hi = (x + 1) / 3;
  const u64 triples = parallel_sum(a_hi, threads, [&](std::size_t idx) {
    const u64 a = idx + 1;
    u64 partial = 0;
    const u64 b_hi = (x + a) / (4 * a - 1);  // 4ab - a - b <= x
    for (u64 b = 1; b <= b_hi; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const u64 s = a + b;
      const u64 m = 4 * a * b;
      // for each c | s, count primes p < x in the progression p == -c (m);
      // candidates are m - c, 2m - c, ... and m - c >= 4ab - a - b >= 2.
      for (u64 i = 1; i * i <= s; ++i) {
        if (s % i != 0) continue;
        for (u64 q = m - i; q < x; q += m) partial += sieve.is_prime(q);
        const u64 j = s / i;
        if (j != i)
          for (u64 q = m - j; q < x; q += m) partial += sieve.is_prime(q);
      }
    }
    return partial;
  });
  return 3 * triples;
}

u64 sum_f1_bruteforce(u64 x, u64 ceiling) {
  check_x(x, "sum_f1_bruteforce");
  if (x > ceiling)
    throw resource_limit_error(
        "sum_f1_bruteforce: x = " + std::to_string(x) +
        " exceeds the enumeration ceiling " + std::to_string(ceiling) +
        " (full per-prime solution enumeration required)");
  const PrimeSieve sieve(x);
  u64 total = 0;
  for (u64 p = 2; p < x; ++p)
    if (sieve.is_prime(p)) total += census(p).f1;
  return total;
}

std::vector<MeanValueRow> mean_value_report(const std::vector<u64>& grid,
                                            bool with_f1, int threads) {
  for (std::size_t i = 0; i < grid.size(); ++i) {
    check_x(grid[i], "mean_value_report");
    if (i > 0 && grid[i] <= grid[i - 1])
      throw std::invalid_argument("mean_value_report: grid must be ascending");
  }
  std::vector<MeanValueRow> rows;
  rows.reserve(grid.size());
  for (const u64 x : grid) {
    MeanValueRow row;
    row.x = x;
    row.sum_f2 = sum_f2_progression(x, threads);
    if (with_f1) row.sum_f1 = sum_f1_bruteforce(x);
    const double ln_x = std::log(static_cast<double>(x));
    row.r_lower = static_cast<double>(row.sum_f2) /
                  (static_cast<double>(x) * ln_x * ln_x);
    if (ln_x > 1.0)
      row.r_upper = static_cast<double>(row.sum_f2) /
                    (static_cast<double>(x) * ln_x * ln_x * std::log(ln_x));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace fourp
