#pragma once

// Predicted supports of the zero distribution: the arc A where U is real in
// [-1, 1], the circle C_b = {|z - c| = |b|/2}, the intersection point i_b,
// the loop L_b^+ = {|phi_b| = 1} inside C_b, and the segment of A from i_b to 1.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "faber/common.hpp"
#include "faber/conformal.hpp"
#include "faber/errors.hpp"

namespace faber::limitsets {

enum class Case { Subcritical, Critical, Supercritical };

inline const char* to_string(Case c) {
  switch (c) {
    case Case::Subcritical: return "subcritical";
    case Case::Critical: return "critical";
    case Case::Supercritical: return "supercritical";
  }
  return "?";
}

struct CaseClass {
  Case tag;
  double rcos;
};

inline constexpr double kCriticalTolerance = 1e-12;

inline CaseClass classify(const conformal::AirfoilParams& p) {
  double r = p.rcos();
  if (r < 1.5 - kCriticalTolerance) return {Case::Subcritical, r};
  if (std::abs(r - 1.5) <= kCriticalTolerance) return {Case::Critical, r};
  return {Case::Supercritical, r};
}

struct ArcSample {
  double rho;
  cplx z_plus;
  cplx z_minus;
};

struct ArcA {
  std::vector<ArcSample> samples;  // rho increasing from 0 to 1
  bool is_interval;                // b in (-1, 0): A = [-1, 1]
  bool has_circle_component;       // b real, b <= -1
};

/// Samples of A at m levels, Chebyshev-spaced in sqrt(rho). The branches are
/// continued from rho = 1 (z_plus = 1, z_minus = -1) down to rho = 0 (z = b).
inline ArcA arc_A(const conformal::AirfoilParams& p, int m) {
  if (m < 2) throw ParameterError("arc_A: need at least 2 samples");
  const cplx b = p.b();
  ArcA out;
  out.is_interval = p.is_real() && b.real() > -1.0;
  out.has_circle_component = p.is_real() && b.real() <= -1.0;
  out.samples.resize(m);
  cplx prev_plus = 1.0, prev_minus = -1.0;
  for (int k = m - 1; k >= 0; --k) {
    double s = 0.5 * (1.0 - std::cos(pi * k / (m - 1)));
    double rho = s * s;
    if (k == m - 1) rho = 1.0;
    auto [z1, z2] = conformal::arc_parameter_points(b, rho);
    if (k == m - 1) {
      z1 = 1.0;
      z2 = -1.0;
    } else if (k == 0) {
      z1 = z2 = b;
    }
    double keep = std::abs(z1 - prev_plus) + std::abs(z2 - prev_minus);
    double swap = std::abs(z2 - prev_plus) + std::abs(z1 - prev_minus);
    if (swap < keep) std::swap(z1, z2);
    out.samples[k] = {rho, z1, z2};
    prev_plus = z1;
    prev_minus = z2;
  }
  return out;
}

/// i_b = b + sqrt(rho) b x, where x is the unimodular root of
/// x^2 + 2 sqrt(rho) x + (1 - 1/b^2) = 0. None in the subcritical case.
inline std::optional<cplx> intersection_ib(const conformal::AirfoilParams& p) {
  if (classify(p).tag == Case::Subcritical) return std::nullopt;
  const cplx b = p.b();
  const double b2 = std::norm(b);
  const double num = (b * b + std::conj(b * b)).real() - 1.0;
  const double rho = num * num / (4.0 * b2 * b2);
  const double sr = std::sqrt(rho);
  const cplx disc = std::sqrt(cplx(rho) - (1.0 - 1.0 / (b * b)));
  const cplx x1 = -sr + disc, x2 = -sr - disc;
  const cplx x = std::abs(std::abs(x1) - 1.0) <= std::abs(std::abs(x2) - 1.0) ? x1 : x2;
  if (std::abs(std::abs(x) - 1.0) > 1e-8)
    throw BranchError("intersection_ib: no unimodular root of the phase equation");
  return b + sr * b * x;
}

/// A point z with U(z) = u: the root of z^2 + 2b(u^2 - 1) z + b^2 - u^2(b^2 + 1) = 0
/// whose U value matches u. Ties go to the larger real part.
inline cplx u_inverse(const conformal::AirfoilParams& p, cplx u) {
  const cplx b = p.b();
  const cplx u2 = u * u;
  const cplx half_lin = b * (u2 - 1.0);
  const cplx c0 = b * b - u2 * (b * b + 1.0);
  const cplx d = std::sqrt(half_lin * half_lin - c0);
  cplx z1 = -half_lin + d, z2 = -half_lin - d;
  auto miss = [&](cplx z) -> double {
    if (std::abs(z - p.c()) <= 1e-15 * (1.0 + std::abs(p.c()))) return INFINITY;
    return std::abs(conformal::uvw(p, z).U - u);
  };
  double e1 = miss(z1), e2 = miss(z2);
  if (std::abs(e1 - e2) <= 1e-10 * (1.0 + std::abs(u))) return z1.real() >= z2.real() ? z1 : z2;
  return e1 < e2 ? z1 : z2;
}

/// Lower end u0 of the U-range of the segment part: -1 (subcritical),
/// U(i_b) otherwise.
inline double segment_u0(const conformal::AirfoilParams& p) {
  auto ib = intersection_ib(p);
  if (!ib) return -1.0;
  double u0 = conformal::uvw(p, *ib).U.real();
  return std::clamp(u0, -1.0, 1.0);
}

/// The part of A carrying the segment measure, z = U^{-1}(cos s) for
/// s from 0 (z = 1) to acos(u0) (z = i_b, or the far end of A).
inline std::vector<cplx> segment_curve(const conformal::AirfoilParams& p, int m) {
  if (m < 2) throw ParameterError("segment_curve: need at least 2 samples");
  const double smax = std::acos(segment_u0(p));
  std::vector<cplx> out(m);
  for (int k = 0; k < m; ++k) out[k] = u_inverse(p, std::cos(smax * k / (m - 1)));
  return out;
}

struct LoopLbPlus {
  std::vector<cplx> samples;  // empty in the critical case
  cplx corner;
  cplx c_plus;
  cplx c_minus;
  /// Angle of c_+ and the counterclockwise sweep from c_+ to c_-.
  double start_angle;
  double sweep;
};

/// The loop z = J(b(1 - w)), w running counterclockwise on the unit circle
/// from c_+ = (phi_b)_+(i_b) to c_- = (phi_b)_-(i_b).
inline LoopLbPlus loop_points(const conformal::AirfoilParams& p, int m) {
  CaseClass cc = classify(p);
  if (cc.tag == Case::Subcritical) throw CaseError("loop_points: no loop in the subcritical case");
  if (m < 2) throw ParameterError("loop_points: need at least 2 samples");
  const cplx ib = *intersection_ib(p);
  LoopLbPlus out;
  out.corner = ib;
  out.c_plus = conformal::phi_b(p, ib, conformal::Sheet::Plus).value;
  out.c_minus = conformal::phi_b(p, ib, conformal::Sheet::Minus).value;
  out.start_angle = std::arg(out.c_plus);
  out.sweep = angle_2pi(std::arg(out.c_minus) - out.start_angle);
  if (cc.tag == Case::Critical) {
    out.corner = -1.0;
    out.sweep = 0.0;
    return out;
  }
  out.samples.resize(m);
  for (int k = 0; k < m; ++k) {
    double t = out.start_angle + out.sweep * k / (m - 1);
    out.samples[k] = conformal::phi_b_inverse(p, std::polar(1.0, t));
  }
  out.samples.front() = ib;
  out.samples.back() = ib;
  return out;
}

/// Mass of the loop part of the predicted measure: sweep / 2 pi.
inline double loop_mass(const conformal::AirfoilParams& p) {
  if (classify(p).tag != Case::Supercritical) return 0.0;
  return loop_points(p, 2).sweep / (2.0 * pi);
}

enum class Region { Inside, On, Outside };

inline const char* to_string(Region r) {
  switch (r) {
    case Region::Inside: return "inside";
    case Region::On: return "on";
    case Region::Outside: return "outside";
  }
  return "?";
}

/// Position of z relative to C_b = {|z - c| = |b|/2} = {|V(z)| = |b|^2}.
inline Region cb_region(const conformal::AirfoilParams& p, cplx z) {
  double d = std::abs(z - p.c()) - std::abs(p.b()) / 2.0;
  if (std::abs(d) <= 1e-12) return Region::On;
  return d < 0.0 ? Region::Inside : Region::Outside;
}

inline std::vector<cplx> circle_cb(const conformal::AirfoilParams& p, int m) {
  std::vector<cplx> out(m);
  double r = std::abs(p.b()) / 2.0;
  for (int k = 0; k < m; ++k) out[k] = p.c() + std::polar(r, 2.0 * pi * k / (m - 1));
  return out;
}

/// The circle component {|z - c| = c - b} of A when b <= -1 is real.
inline std::vector<cplx> circle_ctilde(const conformal::AirfoilParams& p, int m) {
  std::vector<cplx> out(m);
  double r = std::abs(p.c() - p.b());
  for (int k = 0; k < m; ++k) out[k] = p.c() + std::polar(r, 2.0 * pi * k / (m - 1));
  return out;
}

/// Psi(e^{it}) for t in [0, 2 pi].
inline std::vector<cplx> airfoil_boundary(const conformal::AirfoilParams& p, int m) {
  std::vector<cplx> out(m);
  for (int k = 0; k < m; ++k) out[k] = conformal::psi(p, std::polar(1.0, 2.0 * pi * k / (m - 1)));
  return out;
}

/// The outer part of L_b: z = J(b(1 - w)) for w on the complementary arc
/// from c_- to c_+ (through w = 1, where z is infinite). Points with
/// |z - c| > clip are dropped; gaps split the result into pieces.
inline std::vector<std::vector<cplx>> loop_minus(const conformal::AirfoilParams& p, int m, double clip) {
  LoopLbPlus lp = loop_points(p, 2);
  double start = lp.start_angle + lp.sweep;
  double sweep = 2.0 * pi - lp.sweep;
  std::vector<std::vector<cplx>> pieces(1);
  for (int k = 0; k < m; ++k) {
    cplx w = std::polar(1.0, start + sweep * k / (m - 1));
    cplx zeta = p.b() * (1.0 - w);
    cplx z = std::abs(zeta) < 1e-300 ? cplx(INFINITY) : conformal::joukowski(zeta);
    if (std::isfinite(z.real()) && std::abs(z - p.c()) <= clip) {
      pieces.back().push_back(z);
    } else if (!pieces.back().empty()) {
      pieces.emplace_back();
    }
  }
  if (pieces.back().empty()) pieces.pop_back();
  return pieces;
}

/// Every curve of the predicted picture.
struct LimitSets {
  CaseClass case_class;
  ArcA arc;
  std::vector<cplx> circle;
  std::vector<cplx> circle_tilde;  // empty unless has_circle_component
  std::vector<cplx> segment;
  std::optional<LoopLbPlus> loop;
  std::optional<cplx> ib;
};

inline LimitSets limit_sets(const conformal::AirfoilParams& p, int m) {
  LimitSets ls;
  ls.case_class = classify(p);
  ls.arc = arc_A(p, m);
  ls.circle = circle_cb(p, m);
  if (ls.arc.has_circle_component) ls.circle_tilde = circle_ctilde(p, m);
  ls.segment = segment_curve(p, m);
  ls.ib = intersection_ib(p);
  if (ls.case_class.tag != Case::Subcritical) ls.loop = loop_points(p, m);
  return ls;
}

/// CSV rows "component,param,re,im" with %.12e numbers.
inline void write_curve_rows(std::ostream& os, const std::string& component, const std::vector<cplx>& pts) {
  for (std::size_t k = 0; k < pts.size(); ++k) {
    double param = pts.size() > 1 ? static_cast<double>(k) / static_cast<double>(pts.size() - 1) : 0.0;
    os << component << ',' << format_e12(param) << ',' << format_e12(pts[k].real()) << ','
       << format_e12(pts[k].imag()) << '\n';
  }
}

inline void write_curves_csv(std::ostream& os, const conformal::AirfoilParams& p, const LimitSets& ls) {
  os << "component,param,re,im\n";
  std::vector<cplx> plus, minus;
  for (const ArcSample& s : ls.arc.samples) {
    plus.push_back(s.z_plus);
    minus.push_back(s.z_minus);
  }
  write_curve_rows(os, "arc_plus", plus);
  write_curve_rows(os, "arc_minus", minus);
  write_curve_rows(os, "segment", ls.segment);
  write_curve_rows(os, "circle_cb", ls.circle);
  if (!ls.circle_tilde.empty()) write_curve_rows(os, "circle_ctilde", ls.circle_tilde);
  if (ls.loop && !ls.loop->samples.empty()) write_curve_rows(os, "loop", ls.loop->samples);
  if (ls.ib) write_curve_rows(os, "corner", {*ls.ib});
  write_curve_rows(os, "airfoil", airfoil_boundary(p, static_cast<int>(ls.circle.size())));
}

}  // namespace faber::limitsets
