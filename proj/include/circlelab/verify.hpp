#pragma once

#include <cmath>
#include <cstdint>

#include "circlelab/arcs.hpp"
#include "circlelab/arith.hpp"
#include "circlelab/circle.hpp"
#include "circlelab/estimates.hpp"
#include "circlelab/localdens.hpp"

namespace circlelab {

struct VerifyParams {
  double A = 1.0;
  double C = 2.0;
  std::uint64_t ell_max = 1000;   // Euler-product truncation
  std::uint64_t q_max = 10000;    // q-expansion truncation
  double beta_window = 50.0;      // singular-integral window = beta_window / n
  bool compute_singular_integral = true;
};

// Full pipeline for one odd n: exact counts, grid integral, arc split,
// singular series by both methods, predictions and the Cauchy-Schwarz bound.
inline CircleReport verify_run(std::uint64_t n, const PrimeTable& t, const VerifyParams& params = {}) {
  if (n % 2 == 0) throw unsupported_input_error("verify_run: n must be odd (use count for even n)");
  CircleReport rep;
  rep.n = n;
  rep.A = params.A;
  rep.C = params.C;
  rep.small_n_flag = n < 1000;

  CountResult cr = direct_count(n, t);
  rep.R = cr.R;

  GridEvaluation grid = build_grid(n, t);
  rep.R_log = grid.weighted_count;

  ArcScheme scheme(n, params.A, params.C);
  rep.Q = scheme.Q();
  rep.coverage_flag = scheme.coverage_flag();
  auto [imaj, imin] = split_integral(grid, scheme);
  rep.I_major = imaj;
  rep.I_minor = imin;

  SingularSeries ss_euler = singular_series_euler(n, params.ell_max);
  SingularSeries ss_ram = singular_series_ramanujan(n, params.q_max);
  rep.singular_series_euler_value = ss_euler.value;
  rep.singular_series_ramanujan_value = ss_ram.value;

  rep.c_infinity_analytic = std::numbers::pi / 4.0;
  if (params.compute_singular_integral && n >= 17)
    rep.c_infinity_numeric = singular_integral(n, params.beta_window / static_cast<double>(n));

  Prediction pred = main_term_prediction(n, ss_euler);
  rep.predicted_weighted = pred.weighted;
  rep.predicted_unweighted = pred.unweighted;
  rep.ratio_weighted = pred.weighted != 0.0 ? rep.R_log / pred.weighted : 0.0;

  CauchySchwarzReport cs = cauchy_schwarz_check(n, grid, scheme);
  rep.cs_minor_abs = cs.i_minor_abs;
  rep.cs_bound = cs.bound;
  rep.cs_holds = cs.holds;
  return rep;
}

}  // namespace circlelab
