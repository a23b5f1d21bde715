#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "circlelab/errors.hpp"
#include "circlelab/expsum.hpp"
#include "circlelab/util.hpp"

namespace circlelab {

struct Arc {
  RationalPoint pt;
  double center = 0.0;
  double radius = 0.0;
};

struct ArcLabel {
  std::optional<RationalPoint> major;  // engaged iff the point lies on a major arc
  bool is_major() const { return major.has_value(); }
};

struct SchemeStats {
  double major_measure = 0.0;
  std::uint64_t overlap_pairs = 0;
  double min_gap = 0.0;
};

// Major/minor dissection: arcs of radius (log n)^C / (q n) around every
// reduced a/q with q <= Q = floor((log n)^A). Immutable after construction.
class ArcScheme {
 public:
  ArcScheme(std::uint64_t n, double A, double C) : n_(n), A_(A), C_(C) {
    if (n < 17) throw std::invalid_argument("ArcScheme: n must be >= 17");
    if (A <= 0.0 || C <= 0.0) throw std::invalid_argument("ArcScheme: A and C must be positive");
    double logn = std::log(static_cast<double>(n));
    Q_ = static_cast<std::uint64_t>(std::floor(std::pow(logn, A)));
    if (Q_ < 1) Q_ = 1;
    radius_scale_ = std::pow(logn, C) / static_cast<double>(n);
    for (std::uint64_t q = 1; q <= Q_; ++q) {
      for (std::uint64_t a = (q == 1 ? 0 : 1); a < q; ++a) {
        if (q > 1 && gcd_u64(a, q) != 1) continue;
        Arc arc;
        arc.pt = RationalPoint(a, q);
        arc.center = arc.pt.center();
        arc.radius = radius_scale_ / static_cast<double>(q);
        arcs_.push_back(arc);
      }
      // Once the union already covers the circle, arcs with larger q can
      // never own a point (smaller q wins the tie-break), so enumeration may
      // stop; classify() recomputes membership and stays exact for all q <= Q.
      if (union_measure() >= 1.0 - 1e-12) {
        enumerated_q_ = q;
        break;
      }
      if (arcs_.size() > 5'000'000)
        throw resource_limit_error("ArcScheme: arc count exceeds enumeration guard");
      enumerated_q_ = q;
    }
    std::sort(arcs_.begin(), arcs_.end(), [](const Arc& x, const Arc& y) { return x.center < y.center; });
    coverage_ = (union_measure() >= 1.0 - 1e-12);
  }

  std::uint64_t n() const { return n_; }
  double A() const { return A_; }
  double C() const { return C_; }
  std::uint64_t Q() const { return Q_; }
  bool coverage_flag() const { return coverage_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  double radius(std::uint64_t q) const { return radius_scale_ / static_cast<double>(q); }

  // Closed arcs, circular distance; among containing arcs the smallest q wins,
  // then the smallest a.
  ArcLabel classify(double alpha) const {
    alpha -= std::floor(alpha);
    for (std::uint64_t q = 1; q <= Q_; ++q) {
      double r = radius(q);
      // candidate numerators within distance r of alpha*q
      double lo = (alpha - r) * static_cast<double>(q);
      double hi = (alpha + r) * static_cast<double>(q);
      std::int64_t a0 = static_cast<std::int64_t>(std::ceil(lo - 1e-12));
      std::int64_t a1 = static_cast<std::int64_t>(std::floor(hi + 1e-12));
      std::optional<std::uint64_t> best;
      for (std::int64_t a = a0; a <= a1; ++a) {
        std::int64_t am = a % static_cast<std::int64_t>(q);
        if (am < 0) am += static_cast<std::int64_t>(q);
        std::uint64_t au = static_cast<std::uint64_t>(am);
        if (q > 1 && (au == 0 || gcd_u64(au, q) != 1)) continue;
        if (q == 1) au = 0;
        double d = circle_dist(alpha, static_cast<double>(a) / static_cast<double>(q));
        if (d <= r && (!best || au < *best)) best = au;
      }
      if (best) return ArcLabel{RationalPoint(*best, q)};
    }
    return ArcLabel{};
  }

  // Lebesgue measure of the union, overlap count, and the smallest gap
  // between disjoint neighbors; interval merge on the circle.
  SchemeStats stats() const {
    SchemeStats st;
    auto [measure, min_gap] = merge_measure();
    st.major_measure = measure;
    st.min_gap = min_gap;

    // overlapping pairs of distinct arcs (circular distance of centers vs radii)
    std::uint64_t overlaps = 0;
    const std::size_t m = arcs_.size();
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        double gap = circle_dist(arcs_[i].center, arcs_[j].center);
        if (gap <= arcs_[i].radius + arcs_[j].radius) ++overlaps;
        // centers are sorted; once the linear distance alone exceeds both radii
        // plus the wrap allowance we could break, but m stays small in practice
      }
    }
    st.overlap_pairs = overlaps;
    return st;
  }

  // Largest q whose arcs are materialized in arcs(); smaller than Q only when
  // enumeration stopped early on full coverage.
  std::uint64_t enumerated_q() const { return enumerated_q_; }

 private:
  double union_measure() const { return merge_measure().first; }

  // (merged measure, min gap between disjoint merged neighbors)
  std::pair<double, double> merge_measure() const {
    struct Iv {
      double lo, hi;
    };
    std::vector<Iv> ivs;
    ivs.reserve(arcs_.size() * 2);
    for (const Arc& a : arcs_) {
      double lo = a.center - a.radius, hi = a.center + a.radius;
      if (hi - lo >= 1.0) return {1.0, 0.0};
      if (lo < 0.0) {
        ivs.push_back({lo + 1.0, 1.0});
        ivs.push_back({0.0, hi});
      } else if (hi > 1.0) {
        ivs.push_back({lo, 1.0});
        ivs.push_back({0.0, hi - 1.0});
      } else {
        ivs.push_back({lo, hi});
      }
    }
    std::sort(ivs.begin(), ivs.end(), [](const Iv& x, const Iv& y) { return x.lo < y.lo; });
    double measure = 0.0;
    double cur_lo = 0.0, cur_hi = -1.0;
    double min_gap = 2.0;
    bool have = false;
    for (const Iv& iv : ivs) {
      if (!have || iv.lo > cur_hi) {
        if (have) {
          measure += cur_hi - cur_lo;
          min_gap = std::min(min_gap, iv.lo - cur_hi);
        }
        cur_lo = iv.lo;
        cur_hi = iv.hi;
        have = true;
      } else {
        cur_hi = std::max(cur_hi, iv.hi);
      }
    }
    if (have) measure += cur_hi - cur_lo;
    return {std::min(measure, 1.0), min_gap > 1.0 ? 0.0 : min_gap};
  }

  std::uint64_t n_;
  double A_, C_;
  std::uint64_t Q_ = 1;
  std::uint64_t enumerated_q_ = 1;
  double radius_scale_ = 0.0;
  bool coverage_ = false;
  std::vector<Arc> arcs_;
};

}  // namespace circlelab
