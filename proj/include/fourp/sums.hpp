#pragma once

#include <cstdint>
#include <vector>

#include "fourp/multiplicative.hpp"

namespace fourp {

// One grid point of the dyadic double sum
//   D(x) = sum_{1 <= i <= L/2} sum_{i <= j <= L-i} 1 / (1 + L - i - j),
// with L = floor(log2 x), together with its normalizations by ln x and by
// ln x * ln ln x.  x is kept in extended precision because the interesting
// grids reach 2^1024, beyond double range.
struct DoubleSumRow {
  long double x;
  int log2_floor;       // L
  double value;         // D
  double ratio_logx;    // D / ln x
  double ratio_loglog;  // D / (ln x * ln ln x)
};

// S(a, W) = sum over W < b <= 2W with gcd(a, b) = 1 of d(a+b) / phi(b),
// accumulated in ascending b order.
double s_sum(std::uint64_t a, std::uint64_t w, const ArithTables& tables);

// Sum of g(n) over W < n <= 2W with n == -a (mod r), stepping through the
// progression.  Requires gcd(r, a) = 1, the regime in which the bound
// g-sum << W/r + log 2W is used.
double g_congruence_sum(std::uint64_t a, std::uint64_t r, std::uint64_t w,
                        const ArithTables& tables);

// The double sum evaluated by the direct nested loop (the implementation
// of record): inner sums accumulate in ascending j, the outer sum in
// ascending i.  Requires x >= 4 so that L >= 2.
DoubleSumRow tao_double_sum(double x);

// Independent closed form: the inner sum telescopes to the harmonic number
// H_{L-2i+1}, so D = sum_{i=1}^{floor(L/2)} H_{L-2i+1}.  O(L) per value;
// cross-checked against the direct loop to 1e-12 relative.
double double_sum_closed_form(int log2_floor);

struct ScanInfo {
  bool ascending = true;  // exponents strictly increasing
  bool geometric = true;  // constant exponent step, i.e. geometric x grid
};

// Rows for the grid x = 2^k over the given exponents, ascending-x output
// regardless of computation order.  Uses the closed form (O(L) per row),
// so exponents up to 2^1024 and beyond are trivially affordable.  Each
// exponent must be >= 4.  Unsorted or non-geometric grids are accepted but
// flagged in *info.
std::vector<DoubleSumRow> double_sum_scan(const std::vector<int>& exponents,
                                          ScanInfo* info = nullptr,
                                          int threads = 0);

}  // namespace fourp
