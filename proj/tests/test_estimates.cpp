#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "circlelab/circlelab.hpp"

using namespace circlelab;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

// quadruple-loop oracle for the fourth moment
std::uint64_t fourth_moment_bruteforce(std::uint64_t X) {
  std::uint64_t count = 0;
  for (std::uint64_t a = 1; a <= X; ++a)
    for (std::uint64_t b = 1; b <= X; ++b)
      for (std::uint64_t c = 1; c <= X; ++c)
        for (std::uint64_t d = 1; d <= X; ++d)
          if (a * a + b * b == c * c + d * d) ++count;
  return count;
}

}  // namespace

TEST_CASE("fourth moment small values") {
  CHECK(theta_fourth_moment(1).fourth_moment == 1);
  CHECK(theta_fourth_moment(2).fourth_moment == 6);
  CHECK(theta_fourth_moment(3).fourth_moment == 15);
  CHECK_THROWS_AS(theta_fourth_moment(0), std::invalid_argument);
}

TEST_CASE("fourth moment equals brute force up to X = 25") {
  for (std::uint64_t X = 1; X <= 25; ++X)
    REQUIRE(theta_fourth_moment(X).fourth_moment == fourth_moment_bruteforce(X));
}

TEST_CASE("fourth moment ties to the grid via Parseval") {
  // (1/N) sum_j |Theta(j/N)|^4 on an aliasing-free grid (N > 4 X^2)
  const std::uint64_t X = 50;
  const std::size_t N = next_pow2(4 * X * X + 1);
  std::vector<cplx> theta(N, cplx{});
  for (std::uint64_t x = 1; x <= X; ++x) theta[x * x] += cplx(1.0, 0.0);
  fft_radix2(theta, +1);
  KahanSum<double> t4;
  for (const cplx& v : theta) {
    double m2 = std::norm(v);
    t4.add(m2 * m2);
  }
  double grid_value = t4.value() / static_cast<double>(N);
  CHECK_THAT(grid_value,
             WithinRel(static_cast<double>(theta_fourth_moment(X).fourth_moment), 1e-6));
}

TEST_CASE("Parseval for the prime sum") {
  PrimeTable t(2100);
  GridEvaluation g10 = build_grid(10, t);
  auto [lhs10, rhs10] = parseval_prime(g10, t);
  double expect10 = std::pow(std::log(2.), 2) + std::pow(std::log(3.), 2) +
                    std::pow(std::log(5.), 2) + std::pow(std::log(7.), 2);
  CHECK_THAT(rhs10, WithinAbs(expect10, 1e-9));
  CHECK_THAT(lhs10, WithinRel(rhs10, 1e-6));

  GridEvaluation g = build_grid(2001, t);
  auto [lhs, rhs] = parseval_prime(g, t);
  CHECK_THAT(lhs, WithinRel(rhs, 1e-6));
}

TEST_CASE("minor L2 mass is bounded by total mass and partitions") {
  PrimeTable t(5000);
  GridEvaluation g = build_grid(4001, t);
  ArcScheme scheme(4001, 1.0, 2.0);
  double ml2 = minor_l2(g, scheme);
  auto [lhs, rhs] = parseval_prime(g, t);
  CHECK(ml2 <= lhs + 1e-9);
  // major-restricted mass + minor mass = full mass
  KahanSum<double> major;
  for (std::size_t j = 0; j < g.N; ++j)
    if (scheme.classify(static_cast<double>(j) / static_cast<double>(g.N)).is_major())
      major.add(std::norm(g.s_values[j]));
  CHECK_THAT(major.value() / static_cast<double>(g.N) + ml2, WithinRel(lhs, 1e-9));

  ArcScheme covering(4001, 4.0, 9.0);
  REQUIRE(covering.coverage_flag());
  CHECK(minor_l2(g, covering) == 0.0);
}

TEST_CASE("Cauchy-Schwarz bound holds") {
  PrimeTable t(5000);
  GridEvaluation g = build_grid(4001, t);
  for (auto [A, C] : {std::pair{1.0, 2.0}, std::pair{0.5, 1.0}, std::pair{2.0, 3.0}}) {
    ArcScheme scheme(4001, A, C);
    CauchySchwarzReport r = cauchy_schwarz_check(4001, g, scheme);
    CHECK(r.holds);
    CHECK(r.bound <= r.bound_full + 1e-9);
  }
  ArcScheme covering(4001, 4.0, 9.0);
  CauchySchwarzReport r = cauchy_schwarz_check(4001, g, covering);
  CHECK(r.i_minor_abs == 0.0);
  CHECK(r.holds);
}

TEST_CASE("BV discrepancy hand examples") {
  PrimeTable t(1000);
  CHECK_THAT(bv_discrepancy(20, 1, t), WithinAbs(0.0, 1e-12));
  // q=1: 0; q=2: |7 - 8| = 1; q=3: max(|3-4|, |4-4|) = 1
  CHECK_THAT(bv_discrepancy(20, 3, t), WithinAbs(2.0, 1e-12));
}

TEST_CASE("large sieve inequality") {
  {
    std::vector<double> pts{0.0};
    std::vector<cplx> coeffs(10, cplx(1.0, 0.0));
    LargeSieveReport r = large_sieve_check(pts, coeffs);
    CHECK_THAT(r.lhs, WithinAbs(100.0, 1e-9));
    CHECK_THAT(r.rhs, WithinAbs(110.0, 1e-9));
    CHECK(r.delta == 1.0);
    CHECK(r.holds);
  }
  {
    std::vector<double> pts{0.0, 0.5};
    std::vector<cplx> coeffs(4, cplx(1.0, 0.0));
    LargeSieveReport r = large_sieve_check(pts, coeffs);
    CHECK_THAT(r.lhs, WithinAbs(16.0, 1e-9));
    CHECK_THAT(r.rhs, WithinAbs(24.0, 1e-9));
    CHECK(r.holds);
  }
  CHECK_THROWS_AS(large_sieve_check({0.25, 0.25}, {cplx(1.0, 0.0)}), std::invalid_argument);

  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t P = std::uniform_int_distribution<std::size_t>(1, 20)(rng);
    std::size_t N = std::uniform_int_distribution<std::size_t>(1, 200)(rng);
    std::vector<double> pts(P);
    for (double& p : pts) p = uni(rng);
    std::vector<cplx> coeffs(N);
    for (cplx& c : coeffs) c = cplx(uni(rng) * 2 - 1, uni(rng) * 2 - 1);
    REQUIRE(large_sieve_check(pts, coeffs).holds);
  }
}

TEST_CASE("Vaughan decomposition hand examples") {
  PrimeTable t(100000);
  VaughanTerms v7 = vaughan_decompose(7, 2, 2, t);
  CHECK_THAT(v7.S1, WithinAbs(std::log(7.), 1e-12));
  CHECK_THAT(v7.S2, WithinAbs(0.0, 1e-12));
  CHECK_THAT(v7.S3, WithinAbs(0.0, 1e-12));
  CHECK_THAT(v7.total, WithinAbs(von_mangoldt(7, t), 1e-12));

  VaughanTerms v8 = vaughan_decompose(8, 2, 2, t);
  CHECK_THAT(v8.S1, WithinAbs(std::log(2.), 1e-9));
  CHECK_THAT(v8.S2, WithinAbs(0.0, 1e-9));
  CHECK_THAT(v8.S3, WithinAbs(0.0, 1e-9));

  VaughanTerms v12 = vaughan_decompose(12, 3, 3, t);
  CHECK_THAT(v12.S1, WithinAbs(-std::log(2.), 1e-9));
  CHECK_THAT(v12.S2, WithinAbs(-std::log(2.), 1e-9));
  CHECK_THAT(v12.S3, WithinAbs(0.0, 1e-9));
  CHECK_THAT(v12.total, WithinAbs(0.0, 1e-9));
}

TEST_CASE("Vaughan identity exactness for m up to 3000") {
  PrimeTable t(3000);
  for (auto [y, z] : {std::pair{2.0, 2.0}, std::pair{10.0, 10.0}, std::pair{20.0, 50.0}}) {
    for (std::uint64_t m = 2; m <= 3000; ++m) {
      if (static_cast<double>(m) <= z) continue;
      VaughanTerms v = vaughan_decompose(m, y, z, t);
      REQUIRE_THAT(v.total, WithinAbs(von_mangoldt(m, t), 1e-9));
    }
  }
  // cube-root parameter choice
  for (std::uint64_t m = 30; m <= 3000; m += 7) {
    double y = std::cbrt(static_cast<double>(m));
    VaughanTerms v = vaughan_decompose(m, y, y, t);
    REQUIRE_THAT(v.total, WithinAbs(von_mangoldt(m, t), 1e-9));
  }
}

TEST_CASE("major model errors are finite and reported") {
  PrimeTable t(1000);
  ArcScheme scheme(997, 1.0, 2.0);
  MajorModelErrorReport rep = major_model_error(997, scheme, 3, t);
  CHECK(rep.table.size() == scheme.arcs().size() * 3);
  CHECK(rep.max_s_err >= 0.0);
  CHECK(rep.max_theta_err >= 0.0);
  // beta = 0 at the 0/1 arc: |theta-Chebyshev(n) - (n-2)| is the s-residual
  double theta10 = prime_sum(0.0, 10, t).real();
  ArcScheme small(17, 1.0, 2.0);
  (void)small;
  double model = 8.0;
  CHECK_THAT(std::fabs(theta10 - model), WithinAbs(2.65, 0.01));
}
