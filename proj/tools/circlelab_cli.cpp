// Command-line front end: reproducible verification runs over all modules,
// JSON or CSV output. Exit codes: 0 ok, 2 invalid arguments, 3 resource
// limit, 4 numeric failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "circlelab/circlelab.hpp"
#include "circlelab/io.hpp"

namespace {

using namespace circlelab;

constexpr const char* kVersion = "0.1.0";

struct GlobalOpts {
  std::string out;
  std::string format = "json";
  unsigned threads = 1;
  std::uint64_t sieve_limit = 0;  // 0: pick from the command's n range
  std::uint64_t seed = 42;
};

std::ostream& open_output(const GlobalOpts& g, std::ofstream& file) {
  if (g.out.empty()) return std::cout;
  file.open(g.out);
  if (!file) throw std::invalid_argument("cannot open output file: " + g.out);
  return file;
}

json run_header(const GlobalOpts& g, const std::string& command) {
  return {{"command", command}, {"version", kVersion}, {"seed", g.seed}, {"threads", g.threads}};
}

struct Range {
  std::uint64_t lo = 0, hi = 0, stride = 1;
};

Range parse_range(const std::string& s) {
  Range r;
  auto pos = s.find("..");
  if (pos == std::string::npos) throw CLI::ValidationError("range must look like LO..HI");
  r.lo = std::stoull(s.substr(0, pos));
  r.hi = std::stoull(s.substr(pos + 2));
  if (r.hi < r.lo) throw CLI::ValidationError("empty range");
  return r;
}

std::unique_ptr<PrimeTable> make_table(const GlobalOpts& g, std::uint64_t need) {
  std::uint64_t limit = g.sieve_limit ? g.sieve_limit : std::max<std::uint64_t>(need, 2);
  if (need > limit) throw resource_limit_error("requested n exceeds --sieve-limit");
  return std::make_unique<PrimeTable>(limit);
}

void emit(std::ostream& os, const GlobalOpts& g, const json& header, const json& rows,
          const std::string& csv_header, const std::vector<std::string>& csv_rows) {
  if (g.format == "json") {
    json doc = {{"run", header}, {"rows", rows}};
    os << doc.dump(2) << "\n";
  } else {
    os << csv_header << "\n";
    for (const auto& r : csv_rows) os << r << "\n";
  }
}

int cmd_count(const GlobalOpts& g, std::optional<std::uint64_t> n_opt,
              std::optional<std::string> range_opt, bool odd_only) {
  Range r;
  if (n_opt) {
    r.lo = r.hi = *n_opt;
  } else if (range_opt) {
    r = parse_range(*range_opt);
  } else {
    throw CLI::ValidationError("count: need --n or --range");
  }
  auto table = make_table(g, r.hi);
  json rows = json::array();
  std::vector<std::string> csv;
  for (std::uint64_t n = r.lo; n <= r.hi; ++n) {
    if (odd_only && n % 2 == 0) continue;
    CountResult c = direct_count(n, *table, 1);
    json row = {{"n", n}, {"R", c.R}, {"R_log", c.R_log}};
    if (!c.witnesses.empty())
      row["witness"] = {c.witnesses[0].x, c.witnesses[0].y, c.witnesses[0].p};
    rows.push_back(row);
    std::ostringstream os;
    os.precision(12);
    os << n << ',' << c.R << ',' << c.R_log;
    csv.push_back(os.str());
  }
  std::ofstream f;
  emit(open_output(g, f), g, run_header(g, "count"), rows, "n,R,R_log", csv);
  return 0;
}

int cmd_verify(const GlobalOpts& g, const Range& r, const VerifyParams& vp, bool allow_even) {
  auto table = make_table(g, r.hi);
  json rows = json::array();
  std::vector<std::string> csv;
  for (std::uint64_t n = r.lo; n <= r.hi; n += r.stride) {
    if (n % 2 == 0) {
      if (!allow_even) throw unsupported_input_error("verify: even n requires --allow-even");
      continue;  // the pipeline itself is odd-n only; even n are skipped
    }
    CircleReport rep = verify_run(n, *table, vp);
    rows.push_back(report_to_json(rep));
    csv.push_back(report_to_csv_row(rep));
  }
  std::ofstream f;
  json header = run_header(g, "verify");
  header["A"] = vp.A;
  header["C"] = vp.C;
  header["ell_max"] = vp.ell_max;
  header["q_max"] = vp.q_max;
  emit(open_output(g, f), g, header, rows, report_csv_header(), csv);
  return 0;
}

int cmd_arcs(const GlobalOpts& g, std::uint64_t n, double A, double C) {
  ArcScheme scheme(n, A, C);
  std::ofstream f;
  std::ostream& os = open_output(g, f);
  if (g.format == "json") {
    json doc = {{"run", run_header(g, "arcs")}, {"scheme", scheme_to_json(scheme)}};
    os << doc.dump(2) << "\n";
  } else {
    SchemeStats st = scheme.stats();
    os << "n,A,C,Q,num_arcs,major_measure,overlap_pairs,min_gap,coverage\n";
    os.precision(12);
    os << n << ',' << A << ',' << C << ',' << scheme.Q() << ',' << scheme.arcs().size() << ','
       << st.major_measure << ',' << st.overlap_pairs << ',' << st.min_gap << ','
       << (scheme.coverage_flag() ? 1 : 0) << "\n";
  }
  return 0;
}

int cmd_sseries(const GlobalOpts& g, std::uint64_t n, std::uint64_t ell_max, std::uint64_t q_max) {
  SingularSeries e = singular_series_euler(n, ell_max);
  SingularSeries rm = singular_series_ramanujan(n, q_max);
  std::ofstream f;
  std::ostream& os = open_output(g, f);
  if (g.format == "json") {
    json doc = {{"run", run_header(g, "sseries")},
                {"euler", singular_series_to_json(e)},
                {"ramanujan", singular_series_to_json(rm)},
                {"abs_difference", std::fabs(e.value - rm.value)}};
    os << doc.dump(2) << "\n";
  } else {
    os << "n,euler,ramanujan,abs_difference\n";
    os.precision(12);
    os << n << ',' << e.value << ',' << rm.value << ',' << std::fabs(e.value - rm.value) << "\n";
  }
  return 0;
}

int cmd_moments(const GlobalOpts& g, const std::vector<std::uint64_t>& xs) {
  json rows = json::array();
  std::vector<std::string> csv;
  for (std::uint64_t X : xs) {
    MomentReport m = theta_fourth_moment(X);
    rows.push_back({{"X", m.X}, {"fourth_moment", m.fourth_moment}, {"ratio_to_bound", m.ratio_to_bound}});
    std::ostringstream os;
    os.precision(12);
    os << m.X << ',' << m.fourth_moment << ',' << m.ratio_to_bound;
    csv.push_back(os.str());
  }
  std::ofstream f;
  emit(open_output(g, f), g, run_header(g, "moments"), rows, "X,value,ratio", csv);
  return 0;
}

int cmd_bv(const GlobalOpts& g, std::uint64_t n, std::uint64_t q_max, bool use_psi) {
  auto table = make_table(g, n);
  double v = bv_discrepancy(n, q_max, *table, use_psi);
  double logn = std::log(static_cast<double>(n));
  json rows = json::array();
  std::vector<std::string> csv;
  json row = {{"n", n}, {"q_max", q_max}, {"value", v}, {"counting", use_psi ? "psi" : "pi"}};
  // comparison curves n/(log n)^A for the report
  for (int A = 1; A <= 3; ++A)
    row["curve_A" + std::to_string(A)] = static_cast<double>(n) / std::pow(logn, A);
  rows.push_back(row);
  std::ostringstream os;
  os.precision(12);
  os << n << ',' << q_max << ',' << v;
  csv.push_back(os.str());
  std::ofstream f;
  emit(open_output(g, f), g, run_header(g, "bv"), rows, "n,q_max,value", csv);
  return 0;
}

int cmd_vaughan(const GlobalOpts& g, const Range& r, double y, double z) {
  auto table = make_table(g, r.hi);
  json rows = json::array();
  std::vector<std::string> csv;
  for (std::uint64_t m = std::max<std::uint64_t>(r.lo, 2); m <= r.hi; m += r.stride) {
    VaughanTerms v = vaughan_decompose(m, y, z, *table);
    double lam = von_mangoldt(m, *table);
    rows.push_back({{"m", m},
                    {"S1", v.S1},
                    {"S2", v.S2},
                    {"S3", v.S3},
                    {"total", v.total},
                    {"Lambda", lam},
                    {"residual", v.total - lam}});
    std::ostringstream os;
    os.precision(12);
    os << m << ',' << v.S1 << ',' << v.S2 << ',' << v.S3 << ',' << v.total << ',' << lam;
    csv.push_back(os.str());
  }
  std::ofstream f;
  emit(open_output(g, f), g, run_header(g, "vaughan"), rows, "m,S1,S2,S3,total,Lambda", csv);
  return 0;
}

int cmd_sieve_check(const GlobalOpts& g, std::uint64_t trials, std::uint64_t max_points,
                    std::uint64_t max_coeffs) {
  std::mt19937_64 rng(g.seed);
  json rows = json::array();
  std::vector<std::string> csv;
  std::uint64_t failures = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    std::uniform_int_distribution<std::uint64_t> np(1, max_points);
    std::uniform_int_distribution<std::uint64_t> nc(1, max_coeffs);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::size_t P = np(rng), N = nc(rng);
    std::vector<double> pts(P);
    for (double& p : pts) p = uni(rng);
    std::vector<cplx> coeffs(N);
    for (cplx& c : coeffs) c = cplx(uni(rng) * 2.0 - 1.0, uni(rng) * 2.0 - 1.0);
    LargeSieveReport r = large_sieve_check(pts, coeffs);
    if (!r.holds) ++failures;
    if (!r.holds || t < 10) {
      rows.push_back({{"trial", t}, {"points", P}, {"N", N}, {"lhs", r.lhs}, {"rhs", r.rhs},
                      {"delta", r.delta}, {"holds", r.holds}});
      std::ostringstream os;
      os.precision(12);
      os << t << ',' << P << ',' << N << ',' << r.lhs << ',' << r.rhs << ',' << r.holds;
      csv.push_back(os.str());
    }
  }
  std::ofstream f;
  json header = run_header(g, "sieve-check");
  header["trials"] = trials;
  header["failures"] = failures;
  emit(open_output(g, f), g, header, rows, "trial,points,N,lhs,rhs,holds", csv);
  return failures == 0 ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"circlelab: numerical verification of a squares-plus-prime circle-method argument"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--out", g.out, "output file (default stdout)");
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--threads", g.threads, "worker threads (reserved; execution is sequential)");
  app.add_option("--sieve-limit", g.sieve_limit, "prime table limit (default: fit the requested n)");
  app.add_option("--seed", g.seed, "RNG seed for randomized checks");

  // count
  auto* count = app.add_subcommand("count", "exact R(n) by enumeration");
  std::optional<std::uint64_t> count_n;
  std::optional<std::string> count_range;
  bool count_odd = false;
  count->add_option("--n", count_n, "single n");
  count->add_option("--range", count_range, "range LO..HI");
  count->add_flag("--odd", count_odd, "odd n only");

  // verify
  auto* verify = app.add_subcommand("verify", "full circle-method pipeline per n");
  std::optional<std::uint64_t> verify_n;
  std::optional<std::string> verify_range;
  VerifyParams vp;
  bool allow_even = false;
  verify->add_option("--n", verify_n, "single odd n");
  verify->add_option("--range", verify_range, "range LO..HI");
  verify->add_option("--A", vp.A, "arc parameter A (Q = floor((log n)^A))");
  verify->add_option("--C", vp.C, "arc parameter C (radius (log n)^C/(qn))");
  verify->add_option("--ell-max", vp.ell_max, "Euler product truncation");
  verify->add_option("--q-max", vp.q_max, "q-expansion truncation");
  verify->add_flag("--allow-even", allow_even, "do not reject even n in the range");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "CSV trend sweep of verify over a strided range");
  std::string sweep_range;
  std::uint64_t sweep_stride = 2;
  bool sweep_even = false;
  sweep->add_option("--range", sweep_range, "range LO..HI")->required();
  sweep->add_option("--stride", sweep_stride, "stride between n values");
  sweep->add_flag("--even", sweep_even, "allow even n (skipped by the odd-only pipeline)");

  // arcs
  auto* arcs = app.add_subcommand("arcs", "arc scheme construction and stats");
  std::uint64_t arcs_n = 0;
  double arcs_A = 1.0, arcs_C = 2.0;
  arcs->add_option("--n", arcs_n, "n")->required();
  arcs->add_option("--A", arcs_A, "A");
  arcs->add_option("--C", arcs_C, "C");

  // sseries
  auto* sseries = app.add_subcommand("sseries", "singular series, both methods side by side");
  std::uint64_t ss_n = 0, ss_ellmax = 1000, ss_qmax = 10000;
  sseries->add_option("--n", ss_n, "odd n")->required();
  sseries->add_option("--ell-max", ss_ellmax, "Euler product truncation");
  sseries->add_option("--q-max", ss_qmax, "q-expansion truncation");

  // moments
  auto* moments = app.add_subcommand("moments", "fourth moment of Theta");
  std::vector<std::uint64_t> moments_x{100, 1000, 10000};
  moments->add_option("--X", moments_x, "values of X");

  // bv
  auto* bv = app.add_subcommand("bv", "Bombieri-Vinogradov discrepancy sum");
  std::uint64_t bv_n = 0, bv_qmax = 1000;
  bool bv_psi = false;
  bv->add_option("--n", bv_n, "n")->required();
  bv->add_option("--q-max", bv_qmax, "modulus cutoff");
  bv->add_flag("--psi", bv_psi, "use psi-counts instead of pi-counts");

  // vaughan
  auto* vaughan = app.add_subcommand("vaughan", "Vaughan identity spot-check sweep");
  std::string vaughan_range = "2..1000";
  double vy = 10.0, vz = 10.0;
  std::uint64_t vstride = 1;
  vaughan->add_option("--range", vaughan_range, "range of m");
  vaughan->add_option("--stride", vstride, "stride");
  vaughan->add_option("--y", vy, "parameter y");
  vaughan->add_option("--z", vz, "parameter z");

  // sieve-check
  auto* sieve_check = app.add_subcommand("sieve-check", "randomized large sieve trials");
  std::uint64_t sc_trials = 1000, sc_points = 50, sc_coeffs = 1000;
  sieve_check->add_option("--trials", sc_trials, "number of trials");
  sieve_check->add_option("--max-points", sc_points, "max points per trial");
  sieve_check->add_option("--max-N", sc_coeffs, "max coefficient length");

  // global options may appear after the subcommand name
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*count) return cmd_count(g, count_n, count_range, count_odd);
    if (*verify) {
      Range r;
      if (verify_n)
        r.lo = r.hi = *verify_n;
      else if (verify_range)
        r = parse_range(*verify_range);
      else
        throw CLI::ValidationError("verify: need --n or --range");
      r.stride = 1;
      return cmd_verify(g, r, vp, allow_even);
    }
    if (*sweep) {
      Range r = parse_range(sweep_range);
      r.stride = sweep_stride;
      GlobalOpts gc = g;
      gc.format = "csv";
      return cmd_verify(gc, r, vp, sweep_even);
    }
    if (*arcs) return cmd_arcs(g, arcs_n, arcs_A, arcs_C);
    if (*sseries) return cmd_sseries(g, ss_n, ss_ellmax, ss_qmax);
    if (*moments) return cmd_moments(g, moments_x);
    if (*bv) return cmd_bv(g, bv_n, bv_qmax, bv_psi);
    if (*vaughan) {
      Range r = parse_range(vaughan_range);
      r.stride = vstride;
      return cmd_vaughan(g, r, vy, vz);
    }
    if (*sieve_check) return cmd_sieve_check(g, sc_trials, sc_points, sc_coeffs);
  } catch (const circlelab::resource_limit_error& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const circlelab::numeric_error& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return 4;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "invalid arguments: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid arguments: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
