#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "circlelab/arcs.hpp"
#include "circlelab/arith.hpp"
#include "circlelab/circle.hpp"
#include "circlelab/errors.hpp"
#include "circlelab/expsum.hpp"
#include "circlelab/util.hpp"

namespace circlelab {

struct MomentReport {
  std::uint64_t X = 0;
  std::uint64_t fourth_moment = 0;     // exact quadruple count
  double ratio_to_bound = 0.0;         // fourth_moment / (X^2 log X)
};

// #{1 <= x_i <= X : x1^2 + x2^2 = x3^2 + x4^2} = sum_s m(s)^2 with
// m(s) = #{(x,y) : x^2 + y^2 = s}; multiplicities counted blockwise so the
// s-range (up to 2 X^2) never needs a full in-memory array.
inline MomentReport theta_fourth_moment(std::uint64_t X) {
  if (X < 1) throw std::invalid_argument("theta_fourth_moment: X must be >= 1");
  if (X > 100000) throw resource_limit_error("theta_fourth_moment: X exceeds memory guard");
  const std::uint64_t smax = 2 * X * X;
  const std::uint64_t block = std::min<std::uint64_t>(smax + 1, 1u << 24);
  std::vector<std::uint16_t> counts(block);
  std::uint64_t total = 0;
  for (std::uint64_t lo = 2; lo <= smax; lo += block) {
    std::uint64_t hi = std::min(smax, lo + block - 1);
    std::fill(counts.begin(), counts.end(), 0);
    for (std::uint64_t x = 1; x <= X; ++x) {
      std::uint64_t x2 = x * x;
      if (x2 + 1 > hi) break;
      // y with lo <= x^2 + y^2 <= hi
      std::uint64_t ylo = 1;
      if (lo > x2 + 1) ylo = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(lo - x2))));
      while (ylo > 1 && x2 + (ylo - 1) * (ylo - 1) >= lo) --ylo;
      while (x2 + ylo * ylo < lo) ++ylo;
      for (std::uint64_t y = ylo; y <= X && x2 + y * y <= hi; ++y) counts[x2 + y * y - lo]++;
    }
    for (std::uint64_t i = 0; i + lo <= hi; ++i)
      total += static_cast<std::uint64_t>(counts[i]) * counts[i];
  }
  MomentReport r;
  r.X = X;
  r.fourth_moment = total;
  double Xd = static_cast<double>(X);
  r.ratio_to_bound = X > 1 ? static_cast<double>(total) / (Xd * Xd * std::log(Xd)) : static_cast<double>(total);
  return r;
}

// Parseval identity for S on the aliasing-free grid:
// (1/N) sum_j |S(j/N)|^2 = sum_{p <= n} (log p)^2.
inline std::pair<double, double> parseval_prime(const GridEvaluation& grid, const PrimeTable& t) {
  if (grid.N <= grid.n) throw std::invalid_argument("parseval_prime: grid too small");
  KahanSum<double> lhs;
  for (const cplx& v : grid.s_values) lhs.add(std::norm(v));
  KahanSum<double> rhs;
  for (std::uint32_t p : t.primes()) {
    if (p > grid.n) break;
    double lp = std::log(static_cast<double>(p));
    rhs.add(lp * lp);
  }
  return {lhs.value() / static_cast<double>(grid.N), rhs.value()};
}

// (1/N) sum over Minor grid points of |S(j/N)|^2.
inline double minor_l2(const GridEvaluation& grid, const ArcScheme& scheme) {
  if (grid.n != scheme.n()) throw std::invalid_argument("minor_l2: grid and scheme n mismatch");
  KahanSum<double> s;
  const double N = static_cast<double>(grid.N);
  for (std::size_t j = 0; j < grid.N; ++j)
    if (!scheme.classify(static_cast<double>(j) / N).is_major()) s.add(std::norm(grid.s_values[j]));
  return s.value() / N;
}

struct CauchySchwarzReport {
  double i_minor_abs = 0.0;
  double bound = 0.0;       // minor-restricted Theta^4 factor
  double bound_full = 0.0;  // Theta^4 over the whole circle
  bool holds = false;
};

// Grid analogue of the minor-arc Cauchy-Schwarz bound
// |I_m| <= (sum_m |S|^2)^{1/2} (sum |Theta|^4)^{1/2}.
inline CauchySchwarzReport cauchy_schwarz_check(std::uint64_t n, const GridEvaluation& grid,
                                               const ArcScheme& scheme) {
  if (n != grid.n || n != scheme.n()) throw std::invalid_argument("cauchy_schwarz_check: n mismatch");
  const double N = static_cast<double>(grid.N);
  KahanSum<cplx> i_minor;
  KahanSum<double> s2_minor, t4_minor, t4_full;
  for (std::size_t j = 0; j < grid.N; ++j) {
    cplx th = grid.theta_values[j];
    double t2 = std::norm(th);
    t4_full.add(t2 * t2);
    if (!scheme.classify(static_cast<double>(j) / N).is_major()) {
      s2_minor.add(std::norm(grid.s_values[j]));
      t4_minor.add(t2 * t2);
      i_minor.add(grid.s_values[j] * th * th *
                  unit_phase(-static_cast<double>(j) * static_cast<double>(n) / N));
    }
  }
  CauchySchwarzReport r;
  r.i_minor_abs = std::abs(i_minor.value()) / N;
  r.bound = std::sqrt(s2_minor.value() / N) * std::sqrt(t4_minor.value() / N);
  r.bound_full = std::sqrt(s2_minor.value() / N) * std::sqrt(t4_full.value() / N);
  r.holds = r.i_minor_abs <= r.bound * (1.0 + 1e-9) + 1e-12;
  return r;
}

// Bombieri-Vinogradov left-hand side with exact pi-counts:
// sum_{q <= q_max} max_{(a,q)=1} |pi(n;q,a) - pi(n)/phi(q)|.
inline double bv_discrepancy(std::uint64_t n, std::uint64_t q_max, const PrimeTable& t,
                             bool use_psi = false) {
  if (n > t.limit()) throw std::invalid_argument("bv_discrepancy: n exceeds sieve limit");
  double pin = static_cast<double>(t.prime_count(n));
  double psin = 0.0;
  if (use_psi) {
    KahanSum<double> s;
    for (std::uint64_t m = 2; m <= n; ++m) s.add(von_mangoldt(m, t));
    psin = s.value();
  }
  KahanSum<double> total;
  for (std::uint64_t q = 1; q <= q_max; ++q) {
    ProgressionCounts pc = progression_counts(n, q, t);
    auto [mu, phi] = mu_phi(q);
    (void)mu;
    double expect = (use_psi ? psin : pin) / static_cast<double>(phi);
    double worst = 0.0;
    for (std::uint64_t a = 0; a < q; ++a) {
      if (q > 1 && (a == 0 || gcd_u64(a, q) != 1)) continue;
      double got = use_psi ? pc.psi[a] : static_cast<double>(pc.pi[a]);
      worst = std::max(worst, std::fabs(got - expect));
    }
    total.add(worst);
  }
  return total.value();
}

struct LargeSieveReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double delta = 1.0;
  bool holds = false;
};

// Montgomery-Vaughan large sieve: sum_j |sum_n A_n e(alpha_j n)|^2
// <= (N + 1/delta) sum |A_n|^2 for 1/delta-separated points.
inline LargeSieveReport large_sieve_check(const std::vector<double>& points,
                                          const std::vector<cplx>& coeffs) {
  if (points.empty()) throw std::invalid_argument("large_sieve_check: no points");
  double delta = 1.0;  // vacuous separation for a single point
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      double d = circle_dist(points[i], points[j]);
      if (d == 0.0) throw std::invalid_argument("large_sieve_check: coincident points");
      delta = std::min(delta, d);
    }
  const std::size_t N = coeffs.size();
  KahanSum<double> lhs;
  for (double alpha : points) {
    KahanSum<cplx> inner;
    for (std::size_t m = 1; m <= N; ++m)
      inner.add(coeffs[m - 1] * unit_phase(alpha * static_cast<double>(m)));
    lhs.add(std::norm(inner.value()));
  }
  KahanSum<double> energy;
  for (const cplx& c : coeffs) energy.add(std::norm(c));
  LargeSieveReport r;
  r.delta = delta;
  r.lhs = lhs.value();
  r.rhs = (static_cast<double>(N) + 1.0 / delta) * energy.value();
  r.holds = r.lhs <= r.rhs * (1.0 + 1e-9);
  return r;
}

struct VaughanTerms {
  std::uint64_t m = 0;
  double y = 0.0, z = 0.0;
  double S1 = 0.0, S2 = 0.0, S3 = 0.0;
  double total = 0.0;
};

// Three-term Vaughan decomposition; for m > z, S1 - S2 + S3 = Lambda(m) exactly.
//   S1 = sum_{d | m, d <= y} mu(d) log(m/d)
//   S2 = sum_{d <= y, c <= z, dc | m} mu(d) Lambda(c)
//   S3 = sum_{abc = m, a > y, b > z} mu(a) Lambda(b)
inline VaughanTerms vaughan_decompose(std::uint64_t m, double y, double z, const PrimeTable& t) {
  if (m < 2 || m > t.limit()) throw std::invalid_argument("vaughan_decompose: need 2 <= m <= sieve limit");
  // divisors of m with their mu values via the factorization
  Factorization f = factorize(m, t);
  std::vector<std::uint64_t> divs{1};
  for (auto [p, e] : f.factors) {
    std::size_t sz = divs.size();
    std::uint64_t pk = 1;
    for (std::uint32_t i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < sz; ++j) divs.push_back(divs[j] * pk);
    }
  }
  auto mu_of = [](std::uint64_t d) { return mu_phi(d).first; };
  VaughanTerms v;
  v.m = m;
  v.y = y;
  v.z = z;
  for (std::uint64_t d : divs) {
    if (static_cast<double>(d) <= y) {
      std::int64_t mu = mu_of(d);
      if (mu != 0)
        v.S1 += static_cast<double>(mu) *
                std::log(static_cast<double>(m) / static_cast<double>(d));
    }
  }
  for (std::uint64_t d : divs) {
    if (static_cast<double>(d) > y) continue;
    std::int64_t mu = mu_of(d);
    if (mu == 0) continue;
    for (std::uint64_t c : divs) {
      if (static_cast<double>(c) > z) continue;
      if ((m / d) % c != 0) continue;  // need dc | m
      v.S2 += static_cast<double>(mu) * von_mangoldt(c, t);
    }
  }
  for (std::uint64_t a : divs) {
    if (static_cast<double>(a) <= y) continue;
    std::int64_t mu = mu_of(a);
    if (mu == 0) continue;
    std::uint64_t rest = m / a;
    for (std::uint64_t b : divs) {
      if (rest % b != 0) continue;
      if (static_cast<double>(b) <= z) continue;
      v.S3 += static_cast<double>(mu) * von_mangoldt(b, t);
    }
  }
  v.total = v.S1 - v.S2 + v.S3;
  return v;
}

struct MajorModelErrorRow {
  RationalPoint pt;
  double beta = 0.0;
  double s_err = 0.0;
  double theta_err = 0.0;
};

struct MajorModelErrorReport {
  double max_s_err = 0.0;
  double max_theta_err = 0.0;
  std::vector<MajorModelErrorRow> table;
};

// Measured residuals of the major-arc models at sampled beta in each arc; the
// asymptotic error terms carry unspecified constants, so nothing is asserted.
inline MajorModelErrorReport major_model_error(std::uint64_t n, const ArcScheme& scheme,
                                               std::uint32_t samples_per_arc, const PrimeTable& t) {
  if (n > t.limit()) throw std::invalid_argument("major_model_error: n exceeds sieve limit");
  std::uint64_t X = static_cast<std::uint64_t>(std::floor(std::sqrt(static_cast<double>(n))));
  MajorModelErrorReport rep;
  for (const Arc& arc : scheme.arcs()) {
    for (std::uint32_t s = 0; s < samples_per_arc; ++s) {
      double frac = samples_per_arc == 1 ? 0.0
                                         : -1.0 + 2.0 * static_cast<double>(s) /
                                                      static_cast<double>(samples_per_arc - 1);
      double beta = frac * arc.radius;
      double alpha = arc.center + beta;
      alpha -= std::floor(alpha);
      MajorModelErrorRow row;
      row.pt = arc.pt;
      row.beta = beta;
      row.s_err = std::abs(prime_sum(alpha, n, t) - s_major_model(arc.pt, beta, n));
      row.theta_err = std::abs(theta_sum(alpha, X) - theta_major_model(arc.pt, beta, X));
      rep.max_s_err = std::max(rep.max_s_err, row.s_err);
      rep.max_theta_err = std::max(rep.max_theta_err, row.theta_err);
      rep.table.push_back(row);
    }
  }
  return rep;
}

}  // namespace circlelab
