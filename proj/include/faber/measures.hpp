#pragma once

// Predicted limit measures, equilibrium moments, and the diagnostics that
// compare them with the zeros of F_n: quadrature residuals, moment and
// Kolmogorov distances, mass counts, and the exterior potential.

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include <json.hpp>

#include "faber/common.hpp"
#include "faber/conformal.hpp"
#include "faber/errors.hpp"
#include "faber/limitsets.hpp"
#include "faber/parallel.hpp"
#include "faber/poly.hpp"
#include "faber/rootfind.hpp"

namespace faber::measures {

/// Density of (U^{-1})_* of the arcsine law on [-1, 1], real b:
/// (1/pi) (1/sqrt(1 - x^2)) (1 - b x) / (1 + b^2 - 2 b x).
inline double pullback_density(const conformal::AirfoilParams& p, double x) {
  if (!p.is_real()) throw ParameterError("pullback_density: requires theta = 0");
  if (!(std::abs(x) < 1.0)) throw DomainError("pullback_density: x must lie in (-1, 1)");
  const double b = p.b().real();
  return (1.0 - b * x) / ((1.0 + b * b - 2.0 * b * x) * pi * std::sqrt((1.0 - x) * (1.0 + x)));
}

/// (1/pi) (1/sqrt(1 - x^2)) (1 + 2 alpha x) / (1 + 4 alpha^2 + 4 alpha x).
inline double ullman_density(double alpha, double x) {
  if (!(std::abs(x) < 1.0)) throw DomainError("ullman_density: x must lie in (-1, 1)");
  return (1.0 + 2.0 * alpha * x) / ((1.0 + 4.0 * alpha * alpha + 4.0 * alpha * x) * pi * std::sqrt((1.0 - x) * (1.0 + x)));
}

struct GaussRule {
  std::vector<double> nodes;  // on [-1, 1], increasing
  std::vector<double> weights;
};

/// Gauss-Legendre rule with m nodes (Newton on P_m from Chebyshev guesses).
inline GaussRule gauss_legendre(int m) {
  if (m < 1) throw ParameterError("gauss_legendre: m must be >= 1");
  GaussRule g;
  g.nodes.resize(m);
  g.weights.resize(m);
  for (int i = 0; i < (m + 1) / 2; ++i) {
    double x = std::cos(pi * (i + 0.75) / (m + 0.5));
    double dp = 1.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= m; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = m * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    g.nodes[m - 1 - i] = x;
    g.nodes[i] = -x;
    g.weights[i] = g.weights[m - 1 - i] = w;
  }
  return g;
}

/// Discretized component of a measure: quadrature nodes, their weights
/// (summing to the component mass) and the density w.r.t. arclength.
struct MeasureComponent {
  std::vector<cplx> nodes;
  std::vector<double> weights;
  std::vector<double> density;
  double mass() const { return pairwise_sum(weights); }
};

struct PredictedMeasure {
  limitsets::Case case_tag;
  double mass_segment;
  double mass_loop;
  /// (1/pi) ds on z = U^{-1}(cos s), s in [0, s_max].
  MeasureComponent segment;
  /// (1/2pi) dt on z = J(b(1 - e^{it})), t in [start, start + sweep].
  MeasureComponent loop;
  double s_max;
  double loop_start;
  double loop_sweep;
};

inline constexpr int kMeasureNodes = 512;

inline PredictedMeasure predicted(const conformal::AirfoilParams& p, int nodes = kMeasureNodes) {
  PredictedMeasure pm;
  pm.case_tag = limitsets::classify(p).tag;
  pm.s_max = std::acos(limitsets::segment_u0(p));
  pm.loop_start = 0.0;
  pm.loop_sweep = 0.0;
  if (pm.case_tag == limitsets::Case::Supercritical) {
    limitsets::LoopLbPlus lp = limitsets::loop_points(p, 2);
    pm.loop_start = lp.start_angle;
    pm.loop_sweep = lp.sweep;
  }
  pm.mass_segment = pm.s_max / pi;
  pm.mass_loop = pm.loop_sweep / (2.0 * pi);
  GaussRule g = gauss_legendre(nodes);
  for (int i = 0; i < nodes; ++i) {
    double s = 0.5 * pm.s_max * (g.nodes[i] + 1.0);
    cplx z = limitsets::u_inverse(p, std::cos(s));
    pm.segment.nodes.push_back(z);
    pm.segment.weights.push_back(0.5 * pm.s_max * g.weights[i] / pi);
    // |dz/ds| = sin s / |U'(z)|
    pm.segment.density.push_back(std::abs(conformal::u_derivative(p, z)) / (pi * std::sin(s)));
  }
  if (pm.loop_sweep > 0.0) {
    const cplx b = p.b();
    for (int i = 0; i < nodes; ++i) {
      double t = pm.loop_start + 0.5 * pm.loop_sweep * (g.nodes[i] + 1.0);
      cplx w = std::polar(1.0, t);
      cplx zeta = b * (1.0 - w);
      cplx dz = 0.5 * (1.0 - 1.0 / (zeta * zeta)) * (-b * cplx(0.0, 1.0) * w);
      pm.loop.nodes.push_back(conformal::joukowski(zeta));
      pm.loop.weights.push_back(0.5 * pm.loop_sweep * g.weights[i] / (2.0 * pi));
      pm.loop.density.push_back(1.0 / (2.0 * pi * std::abs(dz)));
    }
  }
  return pm;
}

/// Moments m_1..m_k_max; m_0 = 1 is implied.
struct MomentVector {
  int k_max = 0;
  std::vector<cplx> moments;
  cplx at(int k) const { return k == 0 ? cplx(1.0) : moments.at(k - 1); }
};

namespace detail {
/// sum_i w_i z_i^k for k = 1..k_max in quad precision, pairwise over i.
inline std::vector<cquad> weighted_power_sums(const std::vector<cplx>& z, const std::vector<double>& w, int k_max) {
  std::vector<std::vector<cquad>> terms(k_max, std::vector<cquad>(z.size()));
  parallel_for(z.size(), [&](std::size_t i) {
    cquad zi = to_complex<quad>(z[i]);
    cquad pw = cquad(quad(w[i]), quad(0)) * zi;
    for (int k = 0; k < k_max; ++k) {
      terms[k][i] = pw;
      pw *= zi;
    }
  });
  std::vector<cquad> out(k_max);
  for (int k = 0; k < k_max; ++k) out[k] = pairwise_sum(terms[k]);
  return out;
}
}  // namespace detail

inline MomentVector predicted_moments(const PredictedMeasure& pm, int k_max) {
  auto seg = detail::weighted_power_sums(pm.segment.nodes, pm.segment.weights, k_max);
  auto loop = detail::weighted_power_sums(pm.loop.nodes, pm.loop.weights, k_max);
  MomentVector mv{k_max, {}};
  for (int k = 0; k < k_max; ++k) mv.moments.push_back(to_cplx(seg[k] + loop[k]));
  return mv;
}

struct EmpiricalMeasure {
  std::vector<cplx> atoms;
  double weight() const { return 1.0 / static_cast<double>(atoms.size()); }
};

inline EmpiricalMeasure empirical(const rootfind::ZeroSet& zs) { return {zs.zeros}; }

inline MomentVector empirical_moments(const EmpiricalMeasure& mu, int k_max) {
  std::vector<double> w(mu.atoms.size(), mu.weight());
  auto s = detail::weighted_power_sums(mu.atoms, w, k_max);
  MomentVector mv{k_max, {}};
  for (const cquad& v : s) mv.moments.push_back(to_cplx(v));
  return mv;
}

/// m_k = (1/2pi) int Psi(e^{it})^k dt, the moments of the boundary pushforward
/// of normalized arclength. With zeta = a w + b, Psi^k = 2^{-k} sum_j C(k,j)
/// zeta^{k-2j}; on |w| = 1 the mean of zeta^m is b^m for m >= 0 and 0 for
/// m < 0 (|b| < |a|), so m_k = 2^{-k} sum_{2j <= k} C(k,j) b^{k-2j}.
/// Summed in quad precision.
inline MomentVector equilibrium_moments(const conformal::AirfoilParams& p, int k_max) {
  if (k_max < 1) throw ParameterError("equilibrium_moments: k_max must be >= 1");
  const cquad b = to_complex<quad>(p.b());
  std::vector<cquad> bpow(k_max + 1);
  bpow[0] = cquad(1);
  for (int m = 1; m <= k_max; ++m) bpow[m] = bpow[m - 1] * b;
  MomentVector mv{k_max, {}};
  std::vector<quad> binom{quad(1)};  // row k of Pascal's triangle
  for (int k = 1; k <= k_max; ++k) {
    std::vector<quad> next(k + 1);
    next[0] = next[k] = quad(1);
    for (int j = 1; j < k; ++j) next[j] = binom[j - 1] + binom[j];
    binom = std::move(next);
    cquad s(0);
    for (int j = 0; 2 * j <= k; ++j) s += binom[j] * bpow[k - 2 * j];
    mv.moments.push_back(to_cplx(s / boost::multiprecision::ldexp(quad(1), k)));
  }
  return mv;
}

/// Power sums (1/n) sum_j z_j^k, k = 1..k_max, from zeros refined to quad
/// precision where possible. The k = n sum magnifies a zero error by about
/// n max|z|^{n-1}, which exceeds 1 in double for R = 2.1 near n = 100.
inline MomentVector refined_power_means(const conformal::AirfoilParams& p, const rootfind::ZeroSet& zs, int k_max) {
  const std::size_t n = zs.zeros.size();
  std::vector<cquad> zq(n);
  parallel_for(n, [&](std::size_t i) {
    auto r = polynomials::refine_zero_quad(p, static_cast<int>(n), zs.zeros[i]);
    zq[i] = r ? *r : to_complex<quad>(zs.zeros[i]);
  });
  std::vector<std::vector<cquad>> terms(k_max, std::vector<cquad>(n));
  parallel_for(n, [&](std::size_t i) {
    cquad pw = zq[i];
    for (int k = 0; k < k_max; ++k) {
      terms[k][i] = pw;
      pw *= zq[i];
    }
  });
  MomentVector mv{k_max, {}};
  for (int k = 0; k < k_max; ++k) mv.moments.push_back(to_cplx(pairwise_sum(terms[k]) / quad(n)));
  return mv;
}

/// r_k = |m_k - (1/n) sum_j z_j^k| for k = 1..n.
inline std::vector<double> quadrature_residuals(const conformal::AirfoilParams& p, const rootfind::ZeroSet& zs,
                                                const MomentVector& eq) {
  const int n = static_cast<int>(zs.zeros.size());
  if (n < 1) throw ParameterError("quadrature_residuals: empty zero set");
  MomentVector emp = refined_power_means(p, zs, n);
  std::vector<double> r(n);
  for (int k = 1; k <= n; ++k) r[k - 1] = std::abs(eq.at(k) - emp.at(k));
  return r;
}

inline std::vector<double> quadrature_residuals(const conformal::AirfoilParams& p, const rootfind::ZeroSet& zs) {
  if (zs.zeros.empty()) throw ParameterError("quadrature_residuals: empty zero set");
  return quadrature_residuals(p, zs, equilibrium_moments(p, static_cast<int>(zs.zeros.size())));
}

/// max_k r_k / max(1, |m_k|).
inline double max_relative_quadrature_residual(const conformal::AirfoilParams& p, const rootfind::ZeroSet& zs) {
  const int n = static_cast<int>(zs.zeros.size());
  if (n < 1) throw ParameterError("quadrature_residuals: empty zero set");
  MomentVector eq = equilibrium_moments(p, n);
  std::vector<double> r = quadrature_residuals(p, zs, eq);
  double m = 0.0;
  for (int k = 1; k <= n; ++k) m = std::max(m, r[k - 1] / std::max(1.0, std::abs(eq.at(k))));
  return m;
}

/// Relative quadrature tolerance: 1e-6 up to n = 60, 1e-4 above.
inline double default_tol_quad(int n) { return n <= 60 ? 1e-6 : 1e-4; }

struct ClassCounts {
  int segment = 0;
  int loop = 0;
  int other = 0;
};

/// Polylines used for classification and plotting.
struct SupportCurves {
  std::vector<cplx> segment;
  std::vector<cplx> loop;  // empty unless supercritical
};

inline constexpr int kCurveSamples = 2001;

inline SupportCurves support_curves(const conformal::AirfoilParams& p, int m = kCurveSamples) {
  SupportCurves sc;
  sc.segment = limitsets::segment_curve(p, m);
  if (limitsets::classify(p).tag != limitsets::Case::Subcritical) sc.loop = limitsets::loop_points(p, m).samples;
  return sc;
}

/// Marks each zero near the segment part or near the loop (distance below
/// 5/sqrt(n)); a zero near both goes to the closer curve.
inline ClassCounts classify_zeros(const conformal::AirfoilParams& p, rootfind::ZeroSet& zs) {
  SupportCurves sc = support_curves(p);
  const double thr = 5.0 / std::sqrt(static_cast<double>(zs.zeros.size()));
  zs.classes.assign(zs.zeros.size(), rootfind::ZeroClass::Unclassified);
  parallel_for(zs.zeros.size(), [&](std::size_t i) {
    double ds = polyline_distance(zs.zeros[i], sc.segment);
    double dl = polyline_distance(zs.zeros[i], sc.loop);
    if (ds < thr || dl < thr) zs.classes[i] = ds <= dl ? rootfind::ZeroClass::Segment : rootfind::ZeroClass::Loop;
  });
  ClassCounts c;
  for (auto k : zs.classes) {
    if (k == rootfind::ZeroClass::Segment) ++c.segment;
    else if (k == rootfind::ZeroClass::Loop) ++c.loop;
    else ++c.other;
  }
  return c;
}

/// Position of z in [0, 1] under the predicted measure's natural parameter:
/// s/pi on the segment part (u = cos s), then mass_segment + t/2pi along the
/// loop. The predicted measure is uniform in this coordinate.
inline double measure_coordinate(const conformal::AirfoilParams& p, const PredictedMeasure& pm, cplx z,
                                 bool on_loop) {
  if (!on_loop || pm.loop_sweep <= 0.0) {
    double u = std::clamp(conformal::uvw(p, z).U.real(), -1.0, 1.0);
    return std::min(std::acos(u), pm.s_max) / pi;
  }
  auto [z1, z2] = conformal::joukowski_preimages(z);
  cplx w1 = 1.0 - z1 / p.b(), w2 = 1.0 - z2 / p.b();
  cplx w = std::abs(std::abs(w1) - 1.0) <= std::abs(std::abs(w2) - 1.0) ? w1 : w2;
  double t = std::min(angle_2pi(std::arg(w) - pm.loop_start), pm.loop_sweep);
  return pm.mass_segment + t / (2.0 * pi);
}

struct WeakStarDistance {
  double moment_dist;
  double cdf_dist;
};

inline constexpr int kMomentDistanceOrder = 20;

/// moment_dist = max_{k <= 20} |m_k(mu_n) - m_k(predicted)|; cdf_dist is the
/// Kolmogorov distance between the zeros in the measure coordinate and the
/// uniform law. In the subcritical case this is the distance between the
/// U-images of the zeros and the arcsine law.
inline WeakStarDistance weak_star_distance(const conformal::AirfoilParams& p, const rootfind::ZeroSet& zs,
                                           const PredictedMeasure& pm) {
  const std::size_t n = zs.zeros.size();
  MomentVector emp = empirical_moments(empirical(zs), kMomentDistanceOrder);
  MomentVector pre = predicted_moments(pm, kMomentDistanceOrder);
  double md = 0.0;
  for (int k = 1; k <= kMomentDistanceOrder; ++k) md = std::max(md, std::abs(emp.at(k) - pre.at(k)));
  SupportCurves sc = support_curves(p);
  std::vector<double> x(n);
  parallel_for(n, [&](std::size_t i) {
    bool on_loop = !sc.loop.empty() && polyline_distance(zs.zeros[i], sc.loop) <
                                           polyline_distance(zs.zeros[i], sc.segment);
    x[i] = measure_coordinate(p, pm, zs.zeros[i], on_loop);
  });
  std::sort(x.begin(), x.end());
  double ks = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    ks = std::max({ks, static_cast<double>(i + 1) / n - x[i], x[i] - static_cast<double>(i) / n});
  return {md, ks};
}

/// Distance between two predicted measures: moment_dist as above; cdf_dist is
/// the Kolmogorov distance of their segment parts in s, which is the
/// difference of the segment masses.
inline WeakStarDistance weak_star_distance(const PredictedMeasure& a, const PredictedMeasure& b) {
  MomentVector ma = predicted_moments(a, kMomentDistanceOrder);
  MomentVector mb = predicted_moments(b, kMomentDistanceOrder);
  double md = 0.0;
  for (int k = 1; k <= kMomentDistanceOrder; ++k) md = std::max(md, std::abs(ma.at(k) - mb.at(k)));
  return {md, std::abs(a.mass_segment - b.mass_segment)};
}

inline constexpr double kPotentialMargin = 0.2;

inline double boundary_distance(const conformal::AirfoilParams& p, cplx z) {
  static thread_local std::vector<cplx> cache;
  static thread_local cplx cached_a{0.0, 0.0};
  if (cache.empty() || cached_a != p.a()) {
    cache = limitsets::airfoil_boundary(p, 4097);
    cached_a = p.a();
  }
  return polyline_distance(z, cache);
}

/// d(z) = |(1/n) sum log|z - z_j| - (log c_K + log|Phi(z)|)|, c_K = |a|/2.
inline std::vector<double> potential_check(const conformal::AirfoilParams& p, const rootfind::ZeroSet& zs,
                                           const std::vector<cplx>& test_points) {
  const double n = static_cast<double>(zs.zeros.size());
  std::vector<double> out;
  for (cplx z : test_points) {
    cplx w = conformal::phi(p, z);
    if (!(std::abs(w) > 1.0) || boundary_distance(p, z) < kPotentialMargin)
      throw DomainError("potential_check: test point closer than 0.2 to the airfoil");
    std::vector<double> logs(zs.zeros.size());
    for (std::size_t j = 0; j < zs.zeros.size(); ++j) logs[j] = std::log(std::abs(z - zs.zeros[j]));
    double lhs = pairwise_sum(logs) / n;
    out.push_back(std::abs(lhs - (std::log(p.capacity()) + std::log(std::abs(w)))));
  }
  return out;
}

/// `count` exterior points Psi(r_k e^{i t_k}), t_k = 2 pi (k + 1/2)/count, each
/// with the smallest r_k (to 1e-6) at which the point is 0.2 from the airfoil.
inline std::vector<cplx> exterior_test_points(const conformal::AirfoilParams& p, int count = 8) {
  std::vector<cplx> out;
  for (int k = 0; k < count; ++k) {
    cplx dir = std::polar(1.0, 2.0 * pi * (k + 0.5) / count);
    double lo = 1.0, hi = 2.0;
    while (boundary_distance(p, conformal::psi(p, hi * dir)) < kPotentialMargin) hi *= 2.0;
    while (hi - lo > 1e-6) {
      double mid = 0.5 * (lo + hi);
      if (boundary_distance(p, conformal::psi(p, mid * dir)) < kPotentialMargin) lo = mid;
      else hi = mid;
    }
    out.push_back(conformal::psi(p, hi * dir));
  }
  return out;
}

/// Diagnostics of one zero set against the predictions.
struct Report {
  int n;
  limitsets::Case case_tag;
  double mass_segment;
  double mass_loop;
  double moment_dist;
  double cdf_dist;
  double quad_max_residual;
  double potential_max_dev;
  ClassCounts counts;
};

inline Report diagnose(const conformal::AirfoilParams& p, rootfind::ZeroSet& zs, const PredictedMeasure& pm) {
  Report r;
  r.n = static_cast<int>(zs.zeros.size());
  r.case_tag = pm.case_tag;
  r.mass_segment = pm.mass_segment;
  r.mass_loop = pm.mass_loop;
  WeakStarDistance wd = weak_star_distance(p, zs, pm);
  r.moment_dist = wd.moment_dist;
  r.cdf_dist = wd.cdf_dist;
  r.quad_max_residual = max_relative_quadrature_residual(p, zs);
  std::vector<double> d = potential_check(p, zs, exterior_test_points(p));
  r.potential_max_dev = *std::max_element(d.begin(), d.end());
  r.counts = classify_zeros(p, zs);
  return r;
}

/// {case, masses, moment_dist, cdf_dist, quad_max_residual, potential_max_dev,
///  counts: {segment, loop, other}}, numbers rounded to 13 significant digits.
inline nlohmann::ordered_json to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["case"] = limitsets::to_string(r.case_tag);
  j["masses"] = {{"segment", round_e12(r.mass_segment)}, {"loop", round_e12(r.mass_loop)}};
  j["moment_dist"] = round_e12(r.moment_dist);
  j["cdf_dist"] = round_e12(r.cdf_dist);
  j["quad_max_residual"] = round_e12(r.quad_max_residual);
  j["potential_max_dev"] = round_e12(r.potential_max_dev);
  j["counts"] = {{"segment", r.counts.segment}, {"loop", r.counts.loop}, {"other", r.counts.other}};
  return j;
}

}  // namespace faber::measures
