#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "circlelab/arith.hpp"
#include "circlelab/errors.hpp"
#include "circlelab/util.hpp"

namespace circlelab {

// Reduced fraction a/q on the circle; a = 0 only together with q = 1.
struct RationalPoint {
  std::uint64_t a = 0;
  std::uint64_t q = 1;

  RationalPoint() = default;
  RationalPoint(std::uint64_t a_, std::uint64_t q_) : a(a_), q(q_) {
    if (q == 0 || a >= q) throw std::invalid_argument("RationalPoint: need 0 <= a < q");
    if (a == 0 && q != 1) throw std::invalid_argument("RationalPoint: a = 0 requires q = 1");
    if (a != 0 && gcd_u64(a, q) != 1) throw std::invalid_argument("RationalPoint: fraction not reduced");
  }

  double center() const { return static_cast<double>(a) / static_cast<double>(q); }
};

// Theta(alpha) = sum_{1 <= x <= X} e(alpha x^2), direct compensated summation.
inline cplx theta_sum(double alpha, std::uint64_t X) {
  if (X < 1) throw std::invalid_argument("theta_sum: X must be >= 1");
  KahanSum<cplx> s;
  for (std::uint64_t x = 1; x <= X; ++x) {
    // extended precision for the phase: alpha * x^2 reaches ~1e12, where a
    // double product already loses ~1e-4 of a turn
    long double ph = static_cast<long double>(alpha) * static_cast<long double>(x) * static_cast<long double>(x);
    s.add(unit_phase(static_cast<double>(ph - std::floor(ph))));
  }
  return s.value();
}

// S(alpha) = sum_{p <= n} (log p) e(alpha p).
inline cplx prime_sum(double alpha, std::uint64_t n, const PrimeTable& t) {
  if (n > t.limit()) throw std::invalid_argument("prime_sum: n exceeds sieve limit");
  KahanSum<cplx> s;
  for (std::uint32_t p : t.primes()) {
    if (p > n) break;
    s.add(std::log(static_cast<double>(p)) * unit_phase(alpha * static_cast<double>(p)));
  }
  return s.value();
}

// G(a, q) = sum_{r mod q} e(a r^2 / q), requires gcd(a, q) = 1.
inline cplx gauss_sum(std::uint64_t a, std::uint64_t q) {
  if (q < 1) throw std::invalid_argument("gauss_sum: q must be >= 1");
  if (gcd_u64(a % q == 0 ? q : a % q, q) != 1) throw std::invalid_argument("gauss_sum: gcd(a,q) != 1");
  KahanSum<cplx> s;
  for (std::uint64_t r = 0; r < q; ++r) {
    std::uint64_t r2 = (r * r) % q;
    s.add(unit_phase(static_cast<double>(a % q) * static_cast<double>(r2) / static_cast<double>(q)));
  }
  return s.value();
}

// V1(beta) = (1/n) * int_2^n e(beta u) du, closed form.
inline cplx v1(double beta, std::uint64_t n) {
  if (n < 3) throw std::invalid_argument("v1: n must be >= 3");
  double nn = static_cast<double>(n);
  if (beta == 0.0) return {(nn - 2.0) / nn, 0.0};
  cplx denom(0.0, kTwoPi * beta);
  return (unit_phase(beta * nn) - unit_phase(beta * 2.0)) / (denom * nn);
}

namespace detail {

// Adaptive Simpson on [a, b] for a complex-valued integrand.
template <typename F>
cplx adaptive_simpson(const F& f, double a, double b, cplx fa, cplx fm, cplx fb, cplx whole,
                      double tol, int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  cplx flm = f(lm), frm = f(rm);
  cplx left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  cplx right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  cplx delta = left + right - whole;
  if (depth <= 0) throw numeric_error("adaptive quadrature: max depth reached without convergence");
  if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return adaptive_simpson(f, a, m, fa, flm, fm, left, tol * 0.5, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, tol * 0.5, depth - 1);
}

// Oscillation-aware integration: split [a, b] so each panel spans at most
// about a quarter period of e(beta t^2) locally, then adaptive Simpson per panel.
template <typename F>
cplx integrate_oscillatory(const F& f, double a, double b, double cycles, double tol,
                           int resolution = 1) {
  if (b <= a) return {0.0, 0.0};
  int panels = static_cast<int>(std::ceil(8.0 * std::max(1.0, cycles))) * resolution;
  if (panels > 2'000'000) throw numeric_error("integrate_oscillatory: panel budget exceeded");
  double h = (b - a) / panels;
  KahanSum<cplx> total;
  double panel_tol = tol / panels;
  for (int i = 0; i < panels; ++i) {
    double x0 = a + i * h, x1 = a + (i + 1) * h;
    double xm = 0.5 * (x0 + x1);
    cplx f0 = f(x0), fm = f(xm), f1 = f(x1);
    cplx whole = (x1 - x0) / 6.0 * (f0 + 4.0 * fm + f1);
    total.add(adaptive_simpson(f, x0, x1, f0, fm, f1, whole, panel_tol, 24));
  }
  return total.value();
}

}  // namespace detail

// I(beta; X) = int_0^X e(beta t^2) dt, absolute error <= 1e-8 * X.
// resolution > 1 forces a finer initial panel split (self-consistency checks).
inline cplx fresnel_integral(double beta, std::uint64_t X, int resolution = 1) {
  if (X < 1) throw std::invalid_argument("fresnel_integral: X must be >= 1");
  double Xd = static_cast<double>(X);
  if (beta == 0.0) return {Xd, 0.0};
  double cycles = std::fabs(beta) * Xd * Xd;  // total phase turns over [0, X]
  auto f = [beta](double t) { return unit_phase(beta * t * t); };
  return detail::integrate_oscillatory(f, 0.0, Xd, cycles, 1e-10 * Xd, resolution);
}

// Major-arc model of S at alpha = a/q + beta: (mu(q)/phi(q)) * n * V1(beta).
inline cplx s_major_model(const RationalPoint& pt, double beta, std::uint64_t n) {
  if (n < 3) throw std::invalid_argument("s_major_model: n must be >= 3");
  auto [mu, phi] = mu_phi(pt.q);
  if (mu == 0) return {0.0, 0.0};
  double coef = static_cast<double>(mu) / static_cast<double>(phi);
  return coef * static_cast<double>(n) * v1(beta, n);
}

// Major-arc model of Theta at alpha = a/q + beta: (1/q) * G(a,q) * I(beta; X).
inline cplx theta_major_model(const RationalPoint& pt, double beta, std::uint64_t X) {
  if (X < 1) throw std::invalid_argument("theta_major_model: X must be >= 1");
  return gauss_sum(pt.q == 1 ? 1 : pt.a, pt.q) / static_cast<double>(pt.q) * fresnel_integral(beta, X);
}

}  // namespace circlelab
