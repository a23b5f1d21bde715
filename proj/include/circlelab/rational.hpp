#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace circlelab {

// Small exact rational; enough for local densities, where numerators and
// denominators stay far below 2^63 after reduction.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    normalize();
  }
  explicit Rational(std::int64_t n) : num(n), den(1) {}

  void normalize() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  friend Rational operator*(const Rational& a, const Rational& b) {
    // cross-reduce first so intermediates stay small
    Rational x(a.num, b.den);
    Rational y(b.num, a.den);
    return Rational(x.num * y.num, x.den * y.den);
  }
  friend Rational operator+(const Rational& a, const Rational& b) {
    std::int64_t g = std::gcd(a.den, b.den);
    std::int64_t lcm = a.den / g * b.den;
    return Rational(a.num * (lcm / a.den) + b.num * (lcm / b.den), lcm);
  }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.num << "/" << r.den;
  }
};

}  // namespace circlelab
