#include "fourp/prime_sieve.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace fourp {

PrimeSieve::PrimeSieve(std::uint64_t limit) : limit_(limit) {
  if (limit < 3)
    throw std::invalid_argument("PrimeSieve: limit must be >= 3, got " +
                                std::to_string(limit));
  if (limit > (1ull << 32))
    throw std::length_error("PrimeSieve: limit " + std::to_string(limit) +
                            " exceeds the sizing cap 2^32");
  flags_.assign(limit, 1);
  flags_[0] = flags_[1] = 0;
  for (std::uint64_t i = 2; i * i < limit; ++i)
    if (flags_[i])
      for (std::uint64_t j = i * i; j < limit; j += i) flags_[j] = 0;
}

std::uint64_t PrimeSieve::count() const {
  std::uint64_t n = 0;
  for (std::uint8_t f : flags_) n += f;
  return n;
}

std::vector<std::uint32_t> PrimeSieve::primes() const {
  std::vector<std::uint32_t> out;
  for (std::uint64_t n = 2; n < limit_; ++n)
    if (flags_[n]) out.push_back(static_cast<std::uint32_t>(n));
  return out;
}

}  // namespace fourp
