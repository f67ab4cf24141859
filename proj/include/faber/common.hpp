#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

namespace faber {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;

/// Fixed data-file float format (%.12e).
inline std::string format_e12(double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of negative zero
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12e", x);
  return buf;
}

/// Rounds to the 13 significant digits that %.12e keeps.
inline double round_e12(double x) {
  if (!std::isfinite(x)) return x;
  return std::stod(format_e12(x));
}

/// Angle t reduced to [0, 2*pi).
inline double angle_2pi(double t) {
  t = std::fmod(t, 2.0 * pi);
  if (t < 0.0) t += 2.0 * pi;
  return t >= 2.0 * pi ? 0.0 : t;
}

/// Angle of w mapped to [0, 2*pi).
inline double angle_2pi(cplx w) { return angle_2pi(std::arg(w)); }

/// Pairwise summation; the fixed split order makes sums reproducible.
template <class T>
T pairwise_sum(const std::vector<T>& v, std::size_t lo, std::size_t hi) {
  if (hi - lo <= 8) {
    T s{};
    for (std::size_t i = lo; i < hi; ++i) s += v[i];
    return s;
  }
  std::size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

template <class T>
T pairwise_sum(const std::vector<T>& v) {
  return pairwise_sum(v, 0, v.size());
}

/// Distance from p to the polyline through pts.
inline double polyline_distance(cplx p, const std::vector<cplx>& pts) {
  if (pts.empty()) return INFINITY;
  double best = std::abs(p - pts.front());
  for (std::size_t i = 1; i < pts.size(); ++i) {
    cplx d = pts[i] - pts[i - 1];
    double len2 = std::norm(d);
    double t = len2 > 0.0 ? std::real((p - pts[i - 1]) * std::conj(d)) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    best = std::min(best, std::abs(p - (pts[i - 1] + t * d)));
  }
  return best;
}

}  // namespace faber
