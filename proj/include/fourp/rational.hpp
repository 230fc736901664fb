#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace fourp {

// Exact rational with canonical form after every operation: den > 0,
// gcd(|num|, den) = 1.  All arithmetic is overflow-checked and throws
// std::overflow_error instead of wrapping.
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  Rational(std::int64_t n) : num_(n), den_(1) {}

  Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
    normalize();
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  friend Rational operator+(const Rational& x, const Rational& y) {
    // num = x.num*y.den + y.num*x.den, den = x.den*y.den
    return Rational(checked_add(checked_mul(x.num_, y.den_),
                                checked_mul(y.num_, x.den_)),
                    checked_mul(x.den_, y.den_));
  }
  friend Rational operator-(const Rational& x, const Rational& y) {
    return x + Rational(checked_neg(y.num_), y.den_);
  }
  friend Rational operator*(const Rational& x, const Rational& y) {
    // cross-reduce first so intermediates stay small
    const std::int64_t g1 = std::gcd(x.num_, y.den_);
    const std::int64_t g2 = std::gcd(y.num_, x.den_);
    return Rational(checked_mul(x.num_ / g1, y.num_ / g2),
                    checked_mul(x.den_ / g2, y.den_ / g1));
  }
  friend Rational operator/(const Rational& x, const Rational& y) {
    if (y.num_ == 0) throw std::invalid_argument("Rational: division by zero");
    return x * Rational(y.den_, y.num_);
  }

  Rational& operator+=(const Rational& y) { return *this = *this + y; }
  Rational& operator-=(const Rational& y) { return *this = *this - y; }
  Rational& operator*=(const Rational& y) { return *this = *this * y; }
  Rational& operator/=(const Rational& y) { return *this = *this / y; }

  // Comparisons are exact: cross-multiply in 128 bits.
  friend bool operator==(const Rational& x, const Rational& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;  // canonical form
  }
  friend bool operator!=(const Rational& x, const Rational& y) {
    return !(x == y);
  }
  friend bool operator<(const Rational& x, const Rational& y) {
    return static_cast<__int128>(x.num_) * y.den_ <
           static_cast<__int128>(y.num_) * x.den_;
  }
  friend bool operator>(const Rational& x, const Rational& y) { return y < x; }
  friend bool operator<=(const Rational& x, const Rational& y) {
    return !(y < x);
  }
  friend bool operator>=(const Rational& x, const Rational& y) {
    return !(x < y);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& x) {
    return os << x.num_ << "/" << x.den_;
  }

 private:
  static std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
      throw std::overflow_error("Rational: addition overflow");
    return r;
  }
  static std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
      throw std::overflow_error("Rational: multiplication overflow");
    return r;
  }
  static std::int64_t checked_neg(std::int64_t a) {
    if (a == INT64_MIN) throw std::overflow_error("Rational: negation overflow");
    return -a;
  }

  void normalize() {
    if (den_ < 0) {
      num_ = checked_neg(num_);
      den_ = checked_neg(den_);
    }
    const std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace fourp
