#pragma once

#include <cstdint>
#include <vector>

namespace fourp {

// One solution of 4/n = 1/n1 + 1/n2 + 1/n3 in canonical sorted form
// n1 <= n2 <= n3, together with the number of distinct ordered
// permutations it represents (6 all distinct, 3 exactly two equal,
// 1 all equal).
struct SortedSolution {
  std::uint64_t n1;
  std::uint64_t n2;
  std::uint64_t n3;
  std::uint32_t multiplicity;

  friend bool operator==(const SortedSolution&, const SortedSolution&) = default;
};

// Ordered-solution counts for a prime p, split by how many of the three
// denominators p divides.  f = f0 + f1 + f2 + f3; for odd primes
// f0 = f3 = 0.
struct SolutionCensus {
  std::uint64_t p;
  std::uint64_t f;
  std::uint64_t f0;
  std::uint64_t f1;
  std::uint64_t f2;
  std::uint64_t f3;
};

bool is_prime(std::uint64_t n);

// All sorted solutions of 4/n = 1/n1 + 1/n2 + 1/n3, in strictly increasing
// lexicographic (n1, n2, n3) order.  Scan: n1 over (n/4, 3n/4]; writing
// r = 4/n - 1/n1 = A/q exactly with A = 4*n1 - n and q = n*n1, n2 runs over
// max(n1, ceil(q/A)) .. floor(2q/A); a candidate is accepted iff
// D = 4*n1*n2 - n*(n1 + n2) > 0 divides n*n1*n2, giving n3 = n*n1*n2 / D.
// All arithmetic is exact; 128-bit intermediates are used where n*n1*n2 can
// exceed 64 bits, and anything that cannot be represented raises
// std::overflow_error rather than wrapping.  Enumeration cost grows like
// n^2 log n; n up to ~10^6 is practical.
std::vector<SortedSolution> enumerate_solutions(std::uint64_t n);

// Total number of ordered solutions (sum of multiplicities).
std::uint64_t f_count(std::uint64_t n);

// Per-prime breakdown of ordered solutions by divisibility class.
SolutionCensus census(std::uint64_t p);

// Number of triples (a, b, c) of positive integers with gcd(a,b) = 1,
// c | a+b and 4ab | p+c, counted over ordered (a, b).  Scan bounds follow
// from c <= a+b: 4ab <= p+c <= p+a+b, so b <= (p+a)/(4a-1) and a <= (p+1)/3.
// For each coprime pair the divisors c of a+b are enumerated by trial
// division and tested against (p+c) mod 4ab = 0.
std::uint64_t lemma3_count(std::uint64_t p);

// f2(p) = 3 * lemma3_count(p); equals census(p).f2 (the oracle-equivalence
// suite checks this exactly for every prime below 10^4).
std::uint64_t f2_parametrized(std::uint64_t p);

namespace detail {

// Coprimality lookup shared across many lemma3 scans: for each a the flags
// of residues mod rad(a) that are coprime to a.  Built once, read-only
// afterwards.
class CoprimeMasks {
 public:
  explicit CoprimeMasks(std::uint32_t a_max);
  std::uint32_t a_max() const { return a_max_; }
  std::uint32_t rad(std::uint32_t a) const { return rad_[a]; }
  bool coprime(std::uint32_t a, std::uint64_t b) const {
    return flags_[offset_[a] + b % rad_[a]] != 0;
  }

 private:
  std::uint32_t a_max_;
  std::vector<std::uint32_t> rad_;
  std::vector<std::size_t> offset_;
  std::vector<std::uint8_t> flags_;
};

// Same count as lemma3_count, restructured for bulk use: scan a <= b and
// weight off-diagonal pairs by 2 (the conditions are symmetric in a, b),
// and replace the divisor loop over c by its unique candidate.  Since
// 4ab >= 2(a+b), exactly one c in [1, 4ab] has c == -p (mod 4ab), namely
// c = 4ab - (p mod 4ab); the pair contributes iff that c is <= a+b and
// divides a+b.  Requires masks.a_max() >= floor((1+sqrt(4p+1))/4) + 1.
std::uint64_t lemma3_count_congruence(std::uint64_t p, const CoprimeMasks& masks);

// Convenience overload building its own masks; for tests and one-off calls.
std::uint64_t lemma3_count_congruence(std::uint64_t p);

// Largest a with 4a^2 - 2a <= p, i.e. the a-range of the half scan.
std::uint32_t lemma3_half_scan_a_max(std::uint64_t p);

}  // namespace detail

}  // namespace fourp
