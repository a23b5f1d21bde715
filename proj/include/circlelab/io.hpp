#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include "circlelab/arcs.hpp"
#include "circlelab/circle.hpp"
#include "circlelab/localdens.hpp"

namespace circlelab {

using json = nlohmann::json;

inline json scheme_to_json(const ArcScheme& scheme) {
  json arcs = json::array();
  for (const Arc& a : scheme.arcs())
    arcs.push_back({{"a", a.pt.a}, {"q", a.pt.q}, {"center", a.center}, {"radius", a.radius}});
  SchemeStats st = scheme.stats();
  return {{"n", scheme.n()},
          {"A", scheme.A()},
          {"C", scheme.C()},
          {"Q", scheme.Q()},
          {"arcs", arcs},
          {"major_measure", st.major_measure},
          {"overlap_pairs", st.overlap_pairs},
          {"min_gap", st.min_gap},
          {"coverage", scheme.coverage_flag()}};
}

inline json singular_series_to_json(const SingularSeries& ss) {
  json j = {{"n", ss.n},
            {"method", ss.method == SeriesMethod::kEulerProduct ? "euler-product" : "ramanujan-expansion"},
            {"truncation", ss.truncation},
            {"value", ss.value},
            {"tail_estimate", ss.tail_estimate}};
  if (!ss.per_factor.empty()) {
    json pf = json::array();
    for (const LocalDensity& d : ss.per_factor)
      pf.push_back({{"ell", d.ell}, {"k_used", d.k_used}, {"value_num", d.value.num}, {"value_den", d.value.den}});
    j["per_factor"] = pf;
  }
  return j;
}

inline json report_to_json(const CircleReport& r) {
  return {{"n", r.n},
          {"A", r.A},
          {"C", r.C},
          {"Q", r.Q},
          {"R", r.R},
          {"R_log", r.R_log},
          {"I_major", r.I_major},
          {"I_minor", r.I_minor},
          {"singular_series", r.singular_series_euler_value},
          {"singular_series_ramanujan", r.singular_series_ramanujan_value},
          {"c_infinity_analytic", r.c_infinity_analytic},
          {"c_infinity_numeric", r.c_infinity_numeric},
          {"predicted_weighted", r.predicted_weighted},
          {"predicted_unweighted", r.predicted_unweighted},
          {"ratio_weighted", r.ratio_weighted},
          {"cs_minor_abs", r.cs_minor_abs},
          {"cs_bound", r.cs_bound},
          {"cs_holds", r.cs_holds},
          {"coverage_flag", r.coverage_flag},
          {"small_n_flag", r.small_n_flag}};
}

inline std::string report_csv_header() {
  return "n,R,R_log,I_major,I_minor,sseries,c_inf_numeric,predicted_weighted,ratio,coverage_flag";
}

inline std::string report_to_csv_row(const CircleReport& r) {
  std::ostringstream os;
  os.precision(12);
  os << r.n << ',' << r.R << ',' << r.R_log << ',' << r.I_major << ',' << r.I_minor << ','
     << r.singular_series_euler_value << ',' << r.c_infinity_numeric << ',' << r.predicted_weighted
     << ',' << r.ratio_weighted << ',' << (r.coverage_flag ? 1 : 0);
  return os.str();
}

}  // namespace circlelab
