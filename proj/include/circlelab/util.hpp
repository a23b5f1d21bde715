#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace circlelab {

using cplx = std::complex<double>;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// e(x) = exp(2*pi*i*x), with the argument reduced mod 1 before scaling so
// large phases (alpha*p with p ~ 1e6) do not lose precision in the sin/cos.
inline cplx unit_phase(double x) {
  double frac = x - std::floor(x);
  double t = kTwoPi * frac;
  return {std::cos(t), std::sin(t)};
}

// Kahan compensated accumulator; long sums here reach 1e6+ terms.
template <typename T>
class KahanSum {
 public:
  void add(const T& v) {
    T y = v - comp_;
    T t = sum_ + y;
    comp_ = (t - sum_) - y;
    sum_ = t;
  }
  T value() const { return sum_; }

 private:
  T sum_{};
  T comp_{};
};

inline std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Distance on the circle R/Z.
inline double circle_dist(double a, double b) {
  double d = std::fabs(a - b);
  d -= std::floor(d);
  return std::min(d, 1.0 - d);
}

}  // namespace circlelab
