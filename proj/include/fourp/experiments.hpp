#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace fourp {

// Thrown when a request exceeds a documented cost ceiling (as opposed to
// being malformed); the CLI maps it to exit code 3.
class resource_limit_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultF1Ceiling = 10'000;

// One row of the mean-value report: sum of f2(p) over primes p < x, the
// brute-force sum of f1(p) when requested and affordable, and the two
// normalizations from the bracketing bounds
//   x log^2 x  <<  sum f2  <<  x log^2 x loglog x.
// Neither ratio is asserted to converge; the report is evidence, not proof.
struct MeanValueRow {
  std::uint64_t x;
  std::uint64_t sum_f2;
  std::optional<std::uint64_t> sum_f1;
  double r_lower;                  // sum_f2 / (x ln^2 x)
  std::optional<double> r_upper;   // sum_f2 / (x ln^2 x lnln x)
};

// Strategy A (prime-major): sum of f2(p) = 3 * lemma3_count(p) over primes
// p < x, each prime counted by its own (a, b) scan.
std::uint64_t sum_f2_per_prime(std::uint64_t x, int threads = 0);

// Strategy B (pair-major): for every coprime (a, b) with 4ab - a - b <= x
// and every c | a+b, count primes p < x with p == -c (mod 4ab) by stepping
// the progression over a sieve, then multiply by 3.  Must equal strategy A
// exactly; their agreement is the correctness argument at scales where
// brute force over solutions is impossible.
std::uint64_t sum_f2_progression(std::uint64_t x, int threads = 0);

// Sum of census(p).f1 over primes p < x.  Requires full solution
// enumeration per prime, so x is capped by `ceiling` (refusal, not
// silence, beyond it).
std::uint64_t sum_f1_bruteforce(std::uint64_t x,
                                std::uint64_t ceiling = kDefaultF1Ceiling);

// Rows for an ascending grid of x values.  sum_f2 comes from the
// progression strategy; sum_f1 is filled only when with_f1 is set (subject
// to the brute-force ceiling).  r_upper is emitted whenever lnln x > 0,
// which holds for every admissible x >= 3.
std::vector<MeanValueRow> mean_value_report(const std::vector<std::uint64_t>& grid,
                                            bool with_f1 = false,
                                            int threads = 0);

}  // namespace fourp
