#include "fourp/solver.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace fourp {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u128 kU128Max = ~static_cast<u128>(0);

void require_prime(u64 p, const char* where) {
  if (!is_prime(p))
    throw std::invalid_argument(std::string(where) + ": " + std::to_string(p) +
                                " is not prime");
}

std::uint32_t multiplicity_of(u64 n1, u64 n2, u64 n3) {
  if (n1 == n2 && n2 == n3) return 1;
  if (n1 == n2 || n2 == n3) return 3;
  return 6;
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (u64 q = 3; q * q <= n; q += 2)
    if (n % q == 0) return false;
  return true;
}

std::vector<SortedSolution> enumerate_solutions(u64 n) {
  if (n < 2)
    throw std::invalid_argument("enumerate_solutions: n must be >= 2, got " +
                                std::to_string(n));
  if (n > (std::numeric_limits<u64>::max)() / 4)
    throw std::overflow_error("enumerate_solutions: n too large");

  std::vector<SortedSolution> out;
  const u64 n1_hi = 3 * n / 4;
  for (u64 n1 = n / 4 + 1; n1 <= n1_hi; ++n1) {
    const u64 a = 4 * n1 - n;          // r = 4/n - 1/n1 = a/q > 0, exactly
    const u64 q = n * n1;
    const u64 n2_lo = std::max(n1, (q + a - 1) / a);
    const u64 n2_hi = 2 * q / a;
    if (n2_lo > n2_hi) continue;

    // D = a*n2 - q and M = q*n2 both advance linearly in n2.  Use plain
    // 64-bit arithmetic while M stays below 2^63 over the whole n2 range,
    // otherwise fall back to 128-bit.
    const u128 m_max = static_cast<u128>(q) * n2_hi;
    if (m_max < (static_cast<u128>(1) << 63)) {
      u64 d = a * n2_lo - q;
      u64 m = q * n2_lo;
      for (u64 n2 = n2_lo; n2 <= n2_hi; ++n2, d += a, m += q) {
        if (d == 0) continue;  // n2 exactly at 1/r: no room for 1/n3
        if (m % d != 0) continue;
        const u64 n3 = m / d;
        if (n3 >= n2) out.push_back({n1, n2, n3, multiplicity_of(n1, n2, n3)});
      }
    } else {
      if (static_cast<u128>(q) > kU128Max / n2_hi)
        throw std::overflow_error(
            "enumerate_solutions: 128-bit overflow at n = " +
            std::to_string(n));
      u128 d = static_cast<u128>(a) * n2_lo - q;
      u128 m = static_cast<u128>(q) * n2_lo;
      for (u64 n2 = n2_lo; n2 <= n2_hi; ++n2, d += a, m += q) {
        if (d == 0) continue;
        if (m % d != 0) continue;
        const u128 n3 = m / d;
        if (n3 < n2) continue;
        if (n3 > (std::numeric_limits<u64>::max)())
          throw std::overflow_error(
              "enumerate_solutions: n3 exceeds 64 bits at n = " +
              std::to_string(n));
        const u64 n3_64 = static_cast<u64>(n3);
        out.push_back({n1, n2, n3_64, multiplicity_of(n1, n2, n3_64)});
      }
    }
  }
  return out;
}

u64 f_count(u64 n) {
  u64 total = 0;
  for (const auto& s : enumerate_solutions(n)) total += s.multiplicity;
  return total;
}

SolutionCensus census(u64 p) {
  require_prime(p, "census");
  SolutionCensus c{p, 0, 0, 0, 0, 0};
  for (const auto& s : enumerate_solutions(p)) {
    const int k = static_cast<int>(s.n1 % p == 0) +
                  static_cast<int>(s.n2 % p == 0) +
                  static_cast<int>(s.n3 % p == 0);
    c.f += s.multiplicity;
    switch (k) {
      case 0: c.f0 += s.multiplicity; break;
      case 1: c.f1 += s.multiplicity; break;
      case 2: c.f2 += s.multiplicity; break;
      default: c.f3 += s.multiplicity; break;
    }
  }
  return c;
}

u64 lemma3_count(u64 p) {
  require_prime(p, "lemma3_count");
  u64 count = 0;
  for (u64 a = 1; 3 * a <= p + 1; ++a) {
    const u64 b_hi = (p + a) / (4 * a - 1);
    for (u64 b = 1; b <= b_hi; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const u64 s = a + b;
      const u64 m = 4 * a * b;
      // divisors c of s by trial division, both halves of each pair
      for (u64 i = 1; i * i <= s; ++i) {
        if (s % i != 0) continue;
        if ((p + i) % m == 0) ++count;
        const u64 j = s / i;
        if (j != i && (p + j) % m == 0) ++count;
      }
    }
  }
  return count;
}

u64 f2_parametrized(u64 p) { return 3 * lemma3_count(p); }

namespace detail {

CoprimeMasks::CoprimeMasks(u32 a_max) : a_max_(a_max) {
  rad_.resize(a_max + 1, 1);
  offset_.resize(a_max + 1, 0);
  std::size_t total = 2;  // entries for a = 0, 1 (rad 1, always coprime)
  std::vector<std::vector<u32>> prime_lists(a_max + 1);
  for (u32 a = 2; a <= a_max; ++a) {
    u32 t = a;
    u32 rad = 1;
    for (u32 q = 2; q * q <= t; ++q)
      if (t % q == 0) {
        rad *= q;
        prime_lists[a].push_back(q);
        do t /= q; while (t % q == 0);
      }
    if (t > 1) {
      rad *= t;
      prime_lists[a].push_back(t);
    }
    rad_[a] = rad;
    total += rad;
  }
  flags_.assign(total, 1);
  offset_[0] = 0;
  if (a_max >= 1) offset_[1] = 1;
  std::size_t pos = 2;
  for (u32 a = 2; a <= a_max; ++a) {
    offset_[a] = pos;
    for (u32 q : prime_lists[a])
      for (u32 r = 0; r < rad_[a]; r += q) flags_[pos + r] = 0;
    pos += rad_[a];
  }
}

u32 lemma3_half_scan_a_max(u64 p) {
  u32 a = 1;
  while (4 * static_cast<u64>(a + 1) * (a + 1) - 2 * (a + 1) <= p) ++a;
  return a;
}

namespace {

// Kernel over a <= b with the unique congruence candidate for c.  UInt is
// uint32_t when every quantity fits (p < 2^30 implies 4ab <= p+a+b < 2^31),
// uint64_t otherwise; the 32-bit divisions are what make the bulk scans in
// the mean-value experiments affordable.
template <typename UInt>
u64 half_scan(UInt p, const CoprimeMasks& masks) {
  u64 count = 0;
  {
    const UInt b_hi = (p + 1) / 3;
    for (UInt b = 1; b <= b_hi; ++b) {
      const UInt m = 4 * b;
      const UInt c = m - p % m;
      const UInt s = 1 + b;
      if (c <= s && s % c == 0) count += (b == 1) ? 1 : 2;
    }
  }
  for (UInt a = 2; 4 * a * a - 2 * a <= p; ++a) {
    const UInt b_hi = (p + a) / (4 * a - 1);
    for (UInt b = a + 1; b <= b_hi; ++b) {
      if (!masks.coprime(static_cast<u32>(a), b)) continue;
      const UInt m = 4 * a * b;
      const UInt c = m - p % m;
      const UInt s = a + b;
      if (c <= s && s % c == 0) count += 2;
    }
  }
  return count;
}

}  // namespace

u64 lemma3_count_congruence(u64 p, const CoprimeMasks& masks) {
  require_prime(p, "lemma3_count_congruence");
  if (lemma3_half_scan_a_max(p) > masks.a_max())
    throw std::invalid_argument("lemma3_count_congruence: masks too small");
  if (p < (1u << 30)) return half_scan<u32>(static_cast<u32>(p), masks);
  return half_scan<u64>(p, masks);
}

u64 lemma3_count_congruence(u64 p) {
  require_prime(p, "lemma3_count_congruence");
  const CoprimeMasks masks(lemma3_half_scan_a_max(p));
  return lemma3_count_congruence(p, masks);
}

}  // namespace detail

}  // namespace fourp
