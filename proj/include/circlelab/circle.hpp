#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "circlelab/arcs.hpp"
#include "circlelab/arith.hpp"
#include "circlelab/errors.hpp"
#include "circlelab/expsum.hpp"
#include "circlelab/fft.hpp"
#include "circlelab/localdens.hpp"
#include "circlelab/util.hpp"

namespace circlelab {

struct Witness {
  std::uint64_t x, y, p;
};

struct CountResult {
  std::uint64_t n = 0;
  std::uint64_t R = 0;        // unweighted representation count
  double R_log = 0.0;         // log p weighted
  std::vector<Witness> witnesses;
};

// Exact enumeration of x^2 + y^2 + p = n over ordered pairs (x, y >= 1).
inline CountResult direct_count(std::uint64_t n, const PrimeTable& t, std::size_t max_witnesses = 16) {
  if (n < 3 || n > t.limit()) throw std::invalid_argument("direct_count: need 3 <= n <= sieve limit");
  CountResult res;
  res.n = n;
  KahanSum<double> rlog;
  for (std::uint64_t x = 1; x * x + 1 < n; ++x) {
    for (std::uint64_t y = 1; x * x + y * y < n; ++y) {
      std::uint64_t p = n - x * x - y * y;
      if (p >= 2 && t.is_prime(p)) {
        res.R += 1;
        rlog.add(std::log(static_cast<double>(p)));
        if (res.witnesses.size() < max_witnesses) res.witnesses.push_back({x, y, p});
      }
    }
  }
  res.R_log = rlog.value();
  return res;
}

// Early-exit existence check, cheap on average (prime density ~ 1/log n).
inline bool has_representation(std::uint64_t n, const PrimeTable& t) {
  if (n < 3 || n > t.limit()) throw std::invalid_argument("has_representation: out of range");
  for (std::uint64_t x = 1; x * x + 1 < n; ++x)
    for (std::uint64_t y = 1; x * x + y * y < n; ++y)
      if (t.is_prime(n - x * x - y * y)) return true;
  return false;
}

// Largest odd n <= limit with R(n) = 0 (0 when none).
inline std::uint64_t largest_zero_odd(std::uint64_t limit, const PrimeTable& t) {
  std::uint64_t largest = 0;
  for (std::uint64_t n = 3; n <= limit; n += 2)
    if (!has_representation(n, t)) largest = n;
  return largest;
}

// Values of S and Theta on the exact DFT grid alpha_j = j / N, N >= 3n + 1 a
// power of two, so every frequency p + x^2 + y^2 < N is resolved without
// aliasing. Grid values come from one FFT each of the weighted indicator
// sequences; direct summation stays available as a slow oracle.
struct GridEvaluation {
  std::uint64_t n = 0;
  std::uint64_t X = 0;  // floor(sqrt(n))
  std::size_t N = 0;
  std::vector<cplx> s_values;
  std::vector<cplx> theta_values;
  double weighted_count = 0.0;
  double imag_residue = 0.0;
};

inline GridEvaluation build_grid(std::uint64_t n, const PrimeTable& t) {
  if (n < 3 || n > t.limit()) throw std::invalid_argument("build_grid: need 3 <= n <= sieve limit");
  GridEvaluation g;
  g.n = n;
  g.X = static_cast<std::uint64_t>(std::floor(std::sqrt(static_cast<double>(n))));
  while ((g.X + 1) * (g.X + 1) <= n) ++g.X;
  while (g.X * g.X > n) --g.X;
  g.N = next_pow2(static_cast<std::size_t>(3 * n + 1));
  if (g.N > (1u << 24)) throw resource_limit_error("build_grid: grid size exceeds memory guard");

  g.s_values.assign(g.N, cplx{});
  for (std::uint32_t p : t.primes()) {
    if (p > n) break;
    g.s_values[p] = cplx(std::log(static_cast<double>(p)), 0.0);
  }
  fft_radix2(g.s_values, +1);  // S(j/N) = sum_m a_m e(+ m j / N)

  g.theta_values.assign(g.N, cplx{});
  for (std::uint64_t x = 1; x <= g.X; ++x) g.theta_values[x * x] += cplx(1.0, 0.0);
  fft_radix2(g.theta_values, +1);

  KahanSum<cplx> acc;
  for (std::size_t j = 0; j < g.N; ++j) {
    cplx th = g.theta_values[j];
    acc.add(g.s_values[j] * th * th *
            unit_phase(-static_cast<double>(j) * static_cast<double>(n) / static_cast<double>(g.N)));
  }
  cplx total = acc.value() / static_cast<double>(g.N);
  g.weighted_count = total.real();
  g.imag_residue = std::fabs(total.imag());
  return g;
}

// R_log via the exact grid integral; equals direct_count(n).R_log up to rounding.
inline std::pair<double, GridEvaluation> dft_representation(std::uint64_t n, const PrimeTable& t) {
  GridEvaluation g = build_grid(n, t);
  double r = g.weighted_count;
  return {r, std::move(g)};
}

// Partial sums of the grid summand over Major/Minor points. The same summands,
// partitioned, so I_major + I_minor reproduces weighted_count to rounding.
inline std::pair<double, double> split_integral(const GridEvaluation& grid, const ArcScheme& scheme) {
  if (grid.n != scheme.n()) throw std::invalid_argument("split_integral: grid and scheme n mismatch");
  KahanSum<cplx> major, minor;
  const double N = static_cast<double>(grid.N);
  for (std::size_t j = 0; j < grid.N; ++j) {
    cplx th = grid.theta_values[j];
    cplx term = grid.s_values[j] * th * th *
                unit_phase(-static_cast<double>(j) * static_cast<double>(grid.n) / N);
    if (scheme.classify(static_cast<double>(j) / N).is_major())
      major.add(term);
    else
      minor.add(term);
  }
  return {major.value().real() / N, minor.value().real() / N};
}

// J = int_{|beta| <= beta_max} V1(beta) I(beta; X)^2 e(-beta n) d beta, real by
// conjugate symmetry; evaluated as twice the real part over [0, beta_max].
inline double singular_integral(std::uint64_t n, double beta_max, int resolution = 1) {
  if (n < 17) throw std::invalid_argument("singular_integral: n must be >= 17");
  if (beta_max <= 0.0) throw std::invalid_argument("singular_integral: beta_max must be positive");
  std::uint64_t X = static_cast<std::uint64_t>(std::floor(std::sqrt(static_cast<double>(n))));
  auto f = [n, X, resolution](double beta) {
    cplx I = fresnel_integral(beta, X, resolution);
    return v1(beta, n) * I * I * unit_phase(-beta * static_cast<double>(n));
  };
  // oscillation budget: e(-beta n) plus I(beta;X)^2 turn at most ~3 n beta_max times
  double cycles = 3.0 * beta_max * static_cast<double>(n);
  cplx half = detail::integrate_oscillatory(f, 0.0, beta_max, cycles, 1e-9, resolution);
  return 2.0 * half.real();
}

// Main-term prediction from the assembled asymptotic.
struct Prediction {
  double weighted = 0.0;    // S(n) * (pi/4) * n
  double unweighted = 0.0;  // weighted / log n  (partial-summation surrogate)
};

inline Prediction main_term_prediction(std::uint64_t n, const SingularSeries& ss) {
  if (n % 2 == 0 || n < 17) throw unsupported_input_error("main_term_prediction: n must be odd and >= 17");
  Prediction p;
  p.weighted = ss.value * (std::numbers::pi / 4.0) * static_cast<double>(n);
  p.unweighted = p.weighted / std::log(static_cast<double>(n));
  return p;
}

struct CircleReport {
  std::uint64_t n = 0;
  double A = 0.0, C = 0.0;
  std::uint64_t Q = 0;
  std::uint64_t R = 0;
  double R_log = 0.0;
  double I_major = 0.0;
  double I_minor = 0.0;
  double singular_series_euler_value = 0.0;
  double singular_series_ramanujan_value = 0.0;
  double c_infinity_analytic = 0.0;  // pi/4
  double c_infinity_numeric = 0.0;   // singular_integral at the default window
  double predicted_weighted = 0.0;
  double predicted_unweighted = 0.0;
  double ratio_weighted = 0.0;  // R_log / predicted_weighted
  double cs_minor_abs = 0.0;
  double cs_bound = 0.0;
  bool cs_holds = false;
  bool coverage_flag = false;
  bool small_n_flag = false;  // no accuracy claim below the asymptotic regime
};

}  // namespace circlelab
