#pragma once

#include <cmath>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "circlelab/arith.hpp"
#include "circlelab/errors.hpp"
#include "circlelab/rational.hpp"
#include "circlelab/util.hpp"

namespace circlelab {

struct LocalDensity {
  std::uint64_t ell = 0;
  std::uint64_t n = 0;
  std::uint32_t k_used = 0;
  Rational value;
};

enum class SeriesMethod { kEulerProduct, kRamanujanExpansion };

struct SingularSeries {
  std::uint64_t n = 0;
  double value = 0.0;
  SeriesMethod method = SeriesMethod::kEulerProduct;
  std::uint64_t truncation = 0;  // ell_max or q_max
  double tail_estimate = 0.0;
  std::vector<LocalDensity> per_factor;  // euler-product route only
};

namespace detail {

inline bool is_small_prime(std::uint64_t ell) {
  if (ell < 2) return false;
  for (std::uint64_t d = 2; d * d <= ell; ++d)
    if (ell % d == 0) return false;
  return true;
}

// #{(x, y) mod ell : x^2 + y^2 ≡ t (mod ell)} via a square-count table, O(ell).
inline std::uint64_t sum_two_squares_count(std::uint64_t ell, std::uint64_t t) {
  std::vector<std::uint32_t> sq(ell, 0);
  for (std::uint64_t x = 0; x < ell; ++x) sq[(x * x) % ell]++;
  std::uint64_t count = 0;
  for (std::uint64_t r = 0; r < ell; ++r) {
    std::uint64_t need = (t + ell - r) % ell;
    count += static_cast<std::uint64_t>(sq[r]) * sq[need];
  }
  return count;
}

}  // namespace detail

// sigma_ell at level k: (ell^k / phi(ell^k)) * #{(x,y) mod ell^k :
// gcd(n - x^2 - y^2, ell) = 1} / ell^{2k}, as an exact rational. The unit
// condition depends only on residues mod ell, so the pair count at level k is
// the level-1 count times ell^{2(k-1)} and the enumeration reduces to O(ell).
inline Rational local_density(std::uint64_t ell, std::uint64_t n, std::uint32_t k) {
  if (k < 1) throw std::invalid_argument("local_density: k must be >= 1");
  if (!detail::is_small_prime(ell)) throw std::invalid_argument("local_density: ell must be prime");
  if (ell > (1u << 14)) throw resource_limit_error("local_density: ell exceeds enumeration guard");
  // ell^k only enters through the invariant scaling; guard against overflow
  if (k > 60 || static_cast<double>(k) * std::log2(static_cast<double>(ell)) > 60.0)
    throw resource_limit_error("local_density: ell^k exceeds representable guard");
  // bad pairs: x^2 + y^2 ≡ n (mod ell); everything else is a unit
  std::uint64_t bad = detail::sum_two_squares_count(ell, n % ell);
  std::uint64_t good = ell * ell - bad;
  // (ell/(ell-1)) * good / ell^2, identical for every k >= 1
  return Rational(static_cast<std::int64_t>(ell), static_cast<std::int64_t>(ell - 1)) *
         Rational(static_cast<std::int64_t>(good), static_cast<std::int64_t>(ell * ell));
}

// Raise k until two consecutive exact values agree; records the witness level.
inline LocalDensity local_density_stable(std::uint64_t ell, std::uint64_t n) {
  std::uint32_t k = (ell == 2 ? 3 : 1);
  Rational prev = local_density(ell, n, k);
  for (std::uint32_t kk = k + 1; kk <= k + 8; ++kk) {
    Rational cur = local_density(ell, n, kk);
    if (cur == prev) return LocalDensity{ell, n, kk, cur};
    prev = cur;
  }
  throw resource_limit_error("local_density_stable: no stabilization within guard");
}

// S(n) = prod_{ell <= ell_max} sigma_ell(n); odd n only.
inline SingularSeries singular_series_euler(std::uint64_t n, std::uint64_t ell_max) {
  if (n % 2 == 0 || n < 3) throw unsupported_input_error("singular_series_euler: n must be odd and >= 3");
  SingularSeries ss;
  ss.n = n;
  ss.method = SeriesMethod::kEulerProduct;
  ss.truncation = ell_max;
  double prod = 1.0;
  for (std::uint64_t ell = 2; ell <= ell_max; ++ell) {
    if (!detail::is_small_prime(ell)) continue;
    LocalDensity d = local_density_stable(ell, n);
    prod *= d.value.to_double();
    ss.per_factor.push_back(d);
  }
  ss.value = prod;
  // |sigma_ell - 1| <= 2/ell^2 per omitted factor; crude tail sum
  ss.tail_estimate = ell_max >= 2 ? 2.0 / static_cast<double>(ell_max) : 2.0;
  return ss;
}

namespace detail {

// Jacobi symbol (a | q) for odd q >= 1.
inline int jacobi(std::int64_t a, std::uint64_t q) {
  a %= static_cast<std::int64_t>(q);
  if (a < 0) a += static_cast<std::int64_t>(q);
  std::uint64_t x = static_cast<std::uint64_t>(a), y = q;
  int result = 1;
  while (x != 0) {
    while (x % 2 == 0) {
      x /= 2;
      std::uint64_t r = y % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(x, y);
    if (x % 4 == 3 && y % 4 == 3) result = -result;
    x %= y;
  }
  return y == 1 ? result : 0;
}

}  // namespace detail

// q-expansion of the singular series:
//   S(n) = sum_q mu(q) / (phi(q) q^2) * sum_{(a,q)=1} G(a,q)^2 e(-a n / q).
// For odd squarefree q the inner sum is (-1|q) * q * c_q(n); for q ≡ 2 (mod 4)
// it vanishes (G(a,2) = 0) and q ≡ 0 (mod 4) has mu(q) = 0. The direct
// Gauss-sum route survives as a test oracle for small q.
inline SingularSeries singular_series_ramanujan(std::uint64_t n, std::uint64_t q_max) {
  if (n % 2 == 0) throw unsupported_input_error("singular_series_ramanujan: n must be odd");
  if (q_max < 1) throw std::invalid_argument("singular_series_ramanujan: q_max must be >= 1");
  SingularSeries ss;
  ss.n = n;
  ss.method = SeriesMethod::kRamanujanExpansion;
  ss.truncation = q_max;
  // sieve mu and phi up to q_max
  std::vector<std::int32_t> mu(q_max + 1, 1);
  std::vector<std::uint32_t> phi(q_max + 1);
  std::vector<char> composite(q_max + 1, 0);
  std::vector<std::uint32_t> primes;
  for (std::uint64_t i = 0; i <= q_max; ++i) phi[i] = static_cast<std::uint32_t>(i);
  for (std::uint64_t i = 2; i <= q_max; ++i) {
    if (!composite[i]) {
      primes.push_back(static_cast<std::uint32_t>(i));
      for (std::uint64_t j = i; j <= q_max; j += i) {
        if (j > i) composite[j] = 1;
        phi[j] -= phi[j] / i;
        mu[j] = (j / i) % i == 0 ? 0 : -mu[j];
      }
    }
  }
  KahanSum<double> sum;
  sum.add(1.0);  // q = 1
  for (std::uint64_t q = 3; q <= q_max; q += 2) {
    if (mu[q] == 0) continue;
    double cq = static_cast<double>(ramanujan_sum(q, n % q));
    double term = static_cast<double>(mu[q]) * static_cast<double>(detail::jacobi(-1, q)) * cq /
                  (static_cast<double>(phi[q]) * static_cast<double>(q));
    sum.add(term);
  }
  ss.value = sum.value();
  ss.tail_estimate = 2.0 / static_cast<double>(q_max);
  return ss;
}

// Exact set {x^2 + y^2 mod 2^k}; odd_squares_only restricts x, y to odd.
inline std::set<std::uint64_t> two_adic_classes(std::uint32_t k, bool odd_squares_only = false) {
  if (k < 1) throw std::invalid_argument("two_adic_classes: k must be >= 1");
  if (k > 14) throw resource_limit_error("two_adic_classes: k exceeds enumeration guard");
  const std::uint64_t m = 1ull << k;
  std::set<std::uint64_t> classes;
  std::vector<std::uint64_t> squares;
  for (std::uint64_t x = 0; x < m; ++x) {
    if (odd_squares_only && x % 2 == 0) continue;
    squares.push_back((x * x) % m);
  }
  for (std::uint64_t sx : squares)
    for (std::uint64_t sy : squares) classes.insert((sx + sy) % m);
  return classes;
}

// The set of residues of a single square mod 2^k (odd x only when requested).
inline std::set<std::uint64_t> two_adic_square_classes(std::uint32_t k, bool odd_only) {
  if (k < 1) throw std::invalid_argument("two_adic_square_classes: k must be >= 1");
  if (k > 14) throw resource_limit_error("two_adic_square_classes: k exceeds enumeration guard");
  const std::uint64_t m = 1ull << k;
  std::set<std::uint64_t> classes;
  for (std::uint64_t x = 0; x < m; ++x) {
    if (odd_only && x % 2 == 0) continue;
    classes.insert((x * x) % m);
  }
  return classes;
}

}  // namespace circlelab
