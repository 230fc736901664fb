#include "fourp/sums.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "fourp/parallel.hpp"

namespace fourp {

namespace {

constexpr double kLn2 = 0.6931471805599453;

void check_window(std::uint64_t w, const ArithTables& tables,
                  const char* where) {
  if (w < 1)
    throw std::invalid_argument(std::string(where) + ": W must be >= 1");
  if (2 * w > tables.limit())
    throw std::out_of_range(std::string(where) + ": 2W = " +
                            std::to_string(2 * w) + " exceeds table limit " +
                            std::to_string(tables.limit()));
}

DoubleSumRow make_row(long double x, int level, double value, double ln_x) {
  DoubleSumRow row;
  row.x = x;
  row.log2_floor = level;
  row.value = value;
  row.ratio_logx = value / ln_x;
  row.ratio_loglog = value / (ln_x * std::log(ln_x));
  return row;
}

}  // namespace

double s_sum(std::uint64_t a, std::uint64_t w, const ArithTables& tables) {
  if (a < 1) throw std::invalid_argument("s_sum: a must be >= 1");
  check_window(w, tables, "s_sum");
  if (a + 2 * w > tables.limit())
    throw std::out_of_range("s_sum: a + 2W = " + std::to_string(a + 2 * w) +
                            " exceeds table limit " +
                            std::to_string(tables.limit()));
  double sum = 0.0;
  for (std::uint64_t b = w + 1; b <= 2 * w; ++b) {
    if (std::gcd(a, b) != 1) continue;
    const auto n = static_cast<std::uint32_t>(a + b);
    sum += static_cast<double>(tables.divisor_count(n)) /
           static_cast<double>(tables.phi(static_cast<std::uint32_t>(b)));
  }
  return sum;
}

double g_congruence_sum(std::uint64_t a, std::uint64_t r, std::uint64_t w,
                        const ArithTables& tables) {
  if (r == 0) throw std::invalid_argument("g_congruence_sum: r must be >= 1");
  if (a < 1) throw std::invalid_argument("g_congruence_sum: a must be >= 1");
  if (std::gcd(a, r) != 1)
    throw std::invalid_argument("g_congruence_sum: gcd(a, r) must be 1");
  check_window(w, tables, "g_congruence_sum");
  // first n > W with n == -a (mod r)
  const std::uint64_t residue = (r - a % r) % r;
  std::uint64_t n = w + 1 + (residue + r - (w + 1) % r) % r;
  double sum = 0.0;
  for (; n <= 2 * w; n += r)
    sum += tables.g_float(static_cast<std::uint32_t>(n));
  return sum;
}

DoubleSumRow tao_double_sum(double x) {
  if (!(x >= 4.0))
    throw std::invalid_argument("tao_double_sum: x must be >= 4");
  const int level = std::ilogb(x);  // floor(log2 x) for finite positive x
  double total = 0.0;
  for (int i = 1; 2 * i <= level; ++i) {
    double inner = 0.0;
    for (int j = i; j <= level - i; ++j)
      inner += 1.0 / static_cast<double>(1 + level - i - j);
    total += inner;
  }
  return make_row(static_cast<long double>(x), level, total, std::log(x));
}

double double_sum_closed_form(int log2_floor) {
  if (log2_floor < 2)
    throw std::invalid_argument("double_sum_closed_form: L must be >= 2");
  // harmonic prefix H[m], ascending accumulation
  std::vector<double> harmonic(static_cast<std::size_t>(log2_floor), 0.0);
  for (int m = 1; m < log2_floor; ++m)
    harmonic[m] = harmonic[m - 1] + 1.0 / static_cast<double>(m);
  double total = 0.0;
  for (int i = 1; 2 * i <= log2_floor; ++i)
    total += harmonic[log2_floor - 2 * i + 1];
  return total;
}

std::vector<DoubleSumRow> double_sum_scan(const std::vector<int>& exponents,
                                          ScanInfo* info, int threads) {
  for (int k : exponents) {
    if (k < 4)
      throw std::invalid_argument(
          "double_sum_scan: exponents must be >= 4 (x >= 16), got " +
          std::to_string(k));
    if (k > 16000)
      throw std::invalid_argument(
          "double_sum_scan: exponent " + std::to_string(k) +
          " exceeds the extended-precision range for the x column");
  }
  if (info) {
    info->ascending = true;
    info->geometric = true;
    for (std::size_t i = 1; i < exponents.size(); ++i) {
      if (exponents[i] <= exponents[i - 1]) info->ascending = false;
      if (i >= 2 && exponents[i] - exponents[i - 1] !=
                        exponents[i - 1] - exponents[i - 2])
        info->geometric = false;
    }
  }
  std::vector<DoubleSumRow> rows(exponents.size());
  parallel_fill(rows, threads, [&](std::size_t i) {
    const int k = exponents[i];
    return make_row(std::exp2(static_cast<long double>(k)), k,
                    double_sum_closed_form(k), static_cast<double>(k) * kLn2);
  });
  return rows;
}

}  // namespace fourp
