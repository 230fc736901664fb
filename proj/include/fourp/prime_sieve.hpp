#pragma once

#include <cstdint>
#include <vector>

namespace fourp {

// Primality flags for all n < limit (sieve of Eratosthenes, one byte per
// number; a limit of 10^7 costs 10 MB).
class PrimeSieve {
 public:
  explicit PrimeSieve(std::uint64_t limit);

  std::uint64_t limit() const { return limit_; }
  bool is_prime(std::uint64_t n) const { return flags_[n] != 0; }
  const std::vector<std::uint8_t>& flags() const { return flags_; }

  std::uint64_t count() const;                      // pi(limit - 1)
  std::vector<std::uint32_t> primes() const;        // ascending, all < limit

 private:
  std::uint64_t limit_;
  std::vector<std::uint8_t> flags_;
};

}  // namespace fourp
