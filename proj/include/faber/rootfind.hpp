#pragma once

// Zeros of F_n. Two independent routes:
//  - simultaneous: Aberth-Ehrlich on the monomial coefficients, in double with
//    a float128 retry, or in float128 directly for Faber polynomials;
//  - seeded: Newton on the residual equation from points predicted by the
//    limit sets (pullbacks of Chebyshev extrema, preimages of roots of unity).

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "faber/common.hpp"
#include "faber/conformal.hpp"
#include "faber/errors.hpp"
#include "faber/limitsets.hpp"
#include "faber/parallel.hpp"
#include "faber/poly.hpp"
#include "faber/polynomials.hpp"

namespace faber::rootfind {

enum class Method { Simultaneous, Seeded, CrossChecked };
enum class SeedMethod { Auto, Simultaneous, Seeded };
enum class ZeroClass { Segment, Loop, Unclassified };

inline const char* to_string(Method m) {
  switch (m) {
    case Method::Simultaneous: return "simultaneous";
    case Method::Seeded: return "seeded";
    case Method::CrossChecked: return "cross-checked";
  }
  return "?";
}

inline const char* to_string(ZeroClass c) {
  switch (c) {
    case ZeroClass::Segment: return "segment";
    case ZeroClass::Loop: return "loop";
    case ZeroClass::Unclassified: return "other";
  }
  return "?";
}

inline SeedMethod parse_seed_method(const std::string& s) {
  if (s == "auto") return SeedMethod::Auto;
  if (s == "simultaneous") return SeedMethod::Simultaneous;
  if (s == "seeded") return SeedMethod::Seeded;
  throw ParameterError("unknown seed method '" + s + "' (auto, simultaneous, seeded)");
}

/// Separation below which two zeros count as one (or are flagged clustered).
inline constexpr double kDedupDistance = 1e-8;
/// Gate on the scaled residual |r| / (2 + |q|^n) of a Faber zero.
inline constexpr double kResidualGate = 1e-7;

struct ZeroSet {
  int n = 0;
  std::vector<cplx> zeros;
  std::vector<double> residuals;
  Method method = Method::Simultaneous;
  std::vector<ZeroClass> classes;
  std::vector<bool> clustered;

  double max_residual() const {
    double m = 0.0;
    for (double r : residuals) m = std::max(m, r);
    return m;
  }
};

/// Sorts by (re, im), fills clustered flags and resets classes.
inline void finalize(ZeroSet& zs) {
  std::vector<std::size_t> order(zs.zeros.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    const cplx &a = zs.zeros[i], &b = zs.zeros[j];
    if (a.real() != b.real()) return a.real() < b.real();
    if (a.imag() != b.imag()) return a.imag() < b.imag();
    return i < j;
  });
  std::vector<cplx> z;
  std::vector<double> r;
  for (std::size_t i : order) {
    z.push_back(zs.zeros[i]);
    r.push_back(i < zs.residuals.size() ? zs.residuals[i] : 0.0);
  }
  zs.zeros = std::move(z);
  zs.residuals = std::move(r);
  zs.classes.assign(zs.zeros.size(), ZeroClass::Unclassified);
  zs.clustered.assign(zs.zeros.size(), false);
  for (std::size_t i = 0; i < zs.zeros.size(); ++i)
    for (std::size_t j = i + 1; j < zs.zeros.size(); ++j)
      if (std::abs(zs.zeros[i] - zs.zeros[j]) < kDedupDistance) zs.clustered[i] = zs.clustered[j] = true;
}

template <class Real>
struct AberthResult {
  std::vector<complex_t<Real>> roots;
  std::vector<bool> converged;
  int iterations = 0;
  bool all_converged() const { return std::all_of(converged.begin(), converged.end(), [](bool c) { return c; }); }
};

/// Aberth-Ehrlich iteration with synchronized (Jacobi) updates. A root stops
/// moving once its correction is at rounding level or its value is below the
/// Horner error bound.
template <class Real>
AberthResult<Real> aberth(const BasicPolyCoeffs<Real>& p, std::vector<complex_t<Real>> z, int max_iter) {
  using C = complex_t<Real>;
  using std::abs;
  const std::size_t n = z.size();
  const Real eps = std::numeric_limits<Real>::epsilon();
  std::vector<Real> abs_coeffs(p.coeffs.size());
  for (std::size_t k = 0; k < p.coeffs.size(); ++k) abs_coeffs[k] = abs(p.coeffs[k]);
  AberthResult<Real> res;
  res.converged.assign(n, false);
  std::vector<C> w(n, C(0));
  std::vector<char> done(n, 0);
  for (int it = 0; it < max_iter; ++it) {
    res.iterations = it + 1;
    parallel_for(n, [&](std::size_t i) {
      w[i] = C(0);
      if (done[i]) return;
      auto [val, der] = p.eval_with_derivative(z[i]);
      Real az = abs(z[i]);
      Real bound = abs_coeffs.back();
      for (int k = static_cast<int>(abs_coeffs.size()) - 2; k >= 0; --k) bound = bound * az + abs_coeffs[k];
      if (abs(val) <= Real(16) * eps * bound) {
        done[i] = 2;
        return;
      }
      C ratio = val / der;
      C s(0);
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) s += C(1) / (z[i] - z[j]);
      C step = ratio / (C(1) - ratio * s);
      w[i] = step;
      if (abs(step) <= Real(4) * eps * az) done[i] = 1;
    });
    bool all = true;
    for (std::size_t i = 0; i < n; ++i) {
      z[i] -= w[i];
      if (!done[i]) all = false;
    }
    if (all) break;
  }
  for (std::size_t i = 0; i < n; ++i) res.converged[i] = done[i] != 0;
  res.roots = std::move(z);
  return res;
}

namespace detail {

/// Scales z = r y so that the roots have geometric-mean modulus about 1, and
/// normalizes the leading coefficient to modulus 1.
template <class Real>
BasicPolyCoeffs<Real> scaled(const BasicPolyCoeffs<Real>& p, double& r) {
  using std::abs;
  using std::pow;
  const int n = p.degree();
  int k0 = 0;
  while (k0 < n && p.coeffs[k0] == complex_t<Real>(0)) ++k0;
  r = 1.0;
  if (k0 < n) {
    Real ratio = abs(p.coeffs[k0]) / abs(p.coeffs[n]);
    r = static_cast<double>(pow(ratio, Real(1) / Real(n - k0)));
    if (!(r > 0.0) || !std::isfinite(r)) r = 1.0;
  }
  BasicPolyCoeffs<Real> q;
  q.coeffs.resize(n + 1);
  Real lead = abs(p.coeffs[n]);
  Real rr(r), rk(1);
  // d_k = c_k r^k / (|c_n| r^n), computed as c_k / |c_n| * r^{k-n}
  std::vector<Real> rpow(n + 1);
  for (int k = 0; k <= n; ++k) {
    rpow[k] = rk;
    rk *= rr;
  }
  for (int k = 0; k <= n; ++k) q.coeffs[k] = p.coeffs[k] * complex_t<Real>(rpow[k] / (rpow[n] * lead));
  return q;
}

inline std::vector<cplx> circle_guesses(int n, cplx center, double radius) {
  std::vector<cplx> g(n);
  for (int k = 0; k < n; ++k) g[k] = center + std::polar(radius, 2.0 * pi * k / n + 0.4);
  return g;
}

template <class Real>
std::vector<complex_t<Real>> widen_points(const std::vector<cplx>& z) {
  std::vector<complex_t<Real>> out;
  out.reserve(z.size());
  for (cplx v : z) out.push_back(to_complex<Real>(v));
  return out;
}

/// Aberth iteration on F_n using F_n'/F_n from the residual equation, so no
/// coefficients are involved. Points in `fixed` repel but do not move.
inline std::vector<cplx> aberth_residual(const conformal::AirfoilParams& p, int n, std::vector<cplx> z,
                                         const std::vector<cplx>& fixed, int max_iter) {
  const std::size_t m = z.size();
  std::vector<char> done(m, 0);
  for (int it = 0; it < max_iter; ++it) {
    std::vector<cplx> w(m, 0.0);
    parallel_for(m, [&](std::size_t i) {
      if (done[i]) return;
      try {
        cplx ratio = 1.0 / polynomials::faber_log_derivative(p, n, z[i]);
        cplx s = 0.0;
        for (cplx f : fixed) s += 1.0 / (z[i] - f);
        for (std::size_t j = 0; j < m; ++j)
          if (j != i) s += 1.0 / (z[i] - z[j]);
        cplx step = ratio / (1.0 - ratio * s);
        if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) step = 1e-6;
        w[i] = step;
        if (std::abs(step) <= 1e-15 * (1.0 + std::abs(z[i]))) done[i] = 1;
      } catch (const DomainError&) {
        w[i] = cplx(1e-7, 1e-7);
      }
    });
    bool all = true;
    for (std::size_t i = 0; i < m; ++i) {
      z[i] -= w[i];
      all = all && done[i];
    }
    if (all) break;
  }
  return z;
}

}  // namespace detail

/// |p(z)| / (max|c_k| max(1, |z|)^n)
inline double scaled_value(const PolyCoeffs& p, cplx z) {
  double scale = p.max_abs_coefficient() * std::pow(std::max(1.0, std::abs(z)), p.degree());
  return std::abs(p(z)) / scale;
}

/// All roots of a general polynomial. Double precision first; float128 if
/// any root fails to converge or to meet the residual bound 1e-10.
inline ZeroSet roots_simultaneous(const PolyCoeffs& poly) {
  const int n = poly.degree();
  if (n < 1) throw ParameterError("roots_simultaneous: degree must be >= 1");
  if (poly.leading() == cplx(0.0)) throw ParameterError("roots_simultaneous: leading coefficient is zero");
  double r = 1.0;
  PolyCoeffs q = detail::scaled(poly, r);
  std::vector<cplx> guess = detail::circle_guesses(n, 0.0, 1.0);
  auto accept = [&](const std::vector<cplx>& roots, const std::vector<bool>& conv) {
    for (int i = 0; i < n; ++i)
      if (!conv[i] || !(scaled_value(poly, roots[i]) < 1e-10)) return false;
    return true;
  };
  ZeroSet zs;
  zs.n = n;
  zs.method = Method::Simultaneous;
  auto dbl = aberth<double>(q, guess, 500);
  std::vector<cplx> roots(n);
  for (int i = 0; i < n; ++i) roots[i] = r * dbl.roots[i];
  if (!accept(roots, dbl.converged)) {
    double rq = 1.0;
    auto qq = detail::scaled(widen<quad>(poly), rq);
    auto ext = aberth<quad>(qq, detail::widen_points<quad>(guess), 1000);
    for (int i = 0; i < n; ++i) roots[i] = rq * to_cplx(ext.roots[i]);
    if (!accept(roots, ext.converged)) {
      int bad = 0;
      for (int i = 0; i < n; ++i)
        if (!ext.converged[i] || !(scaled_value(poly, roots[i]) < 1e-10)) ++bad;
      throw ConvergenceError("roots_simultaneous: " + std::to_string(bad) + " of " + std::to_string(n) +
                             " roots did not converge");
    }
  }
  zs.zeros = roots;
  for (cplx z : roots) zs.residuals.push_back(scaled_value(poly, z));
  finalize(zs);
  return zs;
}

struct NewtonOutcome {
  cplx z;
  double relative;
  bool ok;
};

/// Newton on the residual equation, with steps capped at max_step.
inline NewtonOutcome newton_residual(const conformal::AirfoilParams& p, int n, cplx z, int max_iter = 60,
                                     double max_step = 0.25) {
  try {
    polynomials::Residual r = polynomials::residual(p, n, z);
    for (int it = 0; it < max_iter; ++it) {
      cplx step = r.newton_step();
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
      double s = std::abs(step);
      if (s > max_step) step *= max_step / s;
      cplx znew = z - step;
      polynomials::Residual rn = polynomials::residual(p, n, znew);
      z = znew;
      r = rn;
      if (s <= 1e-15 * (1.0 + std::abs(z))) break;
    }
    double rel = r.relative();
    return {z, rel, std::isfinite(rel) && rel < kResidualGate};
  } catch (const DomainError&) {
    return {z, INFINITY, false};
  }
}

/// A few Newton steps, each kept only if it lowers the residual.
inline std::pair<cplx, double> polish(const conformal::AirfoilParams& p, int n, cplx z) {
  try {
    polynomials::Residual r = polynomials::residual(p, n, z);
    double best = r.relative();
    for (int it = 0; it < 4; ++it) {
      cplx step = r.newton_step();
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag()) || std::abs(step) > 1e-6) break;
      cplx zn = z - step;
      polynomials::Residual rn = polynomials::residual(p, n, zn);
      double rel = rn.relative();
      if (!(rel < best)) break;
      z = zn;
      r = rn;
      best = rel;
    }
    return {z, best};
  } catch (const DomainError&) {
    return {z, INFINITY};
  }
}

/// Zeros of F_n by Aberth on float128 coefficients, polished in double on
/// the residual equation.
inline ZeroSet faber_zeros_simultaneous(const conformal::AirfoilParams& p, int n) {
  if (n < 1) throw ParameterError("faber zeros: n must be >= 1");
  ZeroSet zs;
  zs.n = n;
  zs.method = Method::Simultaneous;
  if (n == 1) {
    zs.zeros = {p.b() / 2.0};
    zs.residuals = {polynomials::residual(p, 1, zs.zeros[0]).relative()};
    finalize(zs);
    return zs;
  }
  double r = 1.0;
  auto q = detail::scaled(polynomials::faber_coefficients<quad>(p, n), r);
  auto ext = aberth<quad>(q, detail::widen_points<quad>(detail::circle_guesses(n, 0.0, 1.0)), 1000);
  if (!ext.all_converged())
    throw ConvergenceError("faber zeros: Aberth iteration did not converge for n = " + std::to_string(n));
  // The coefficient roots are backward stable but can be far off where the
  // zeros cluster; refine them on the residual equation.
  std::vector<cplx> start(n);
  for (int i = 0; i < n; ++i) start[i] = r * to_cplx(ext.roots[i]);
  std::vector<cplx> refined = detail::aberth_residual(p, n, std::move(start), {}, 200);
  zs.zeros.resize(n);
  zs.residuals.resize(n);
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t i) {
    auto [z, rel] = polish(p, n, refined[i]);
    zs.zeros[i] = z;
    zs.residuals[i] = rel;
  });
  finalize(zs);
  if (!(zs.max_residual() < kResidualGate))
    throw ConvergenceError("faber zeros: residual gate failed for n = " + std::to_string(n));
  return zs;
}

struct SeedPlan {
  /// Brackets [U^{-1}(cos((j+1) pi/n)), U^{-1}(cos(j pi/n))] on the segment part.
  std::vector<std::pair<cplx, cplx>> segment_brackets;
  /// U^{-1}(cos((j + 1/2) pi / n)), one per bracket.
  std::vector<cplx> segment_seeds;
  /// J(b(1 - w)) for n-th roots of unity w on the arc (c_+, c_-).
  std::vector<cplx> loop_seeds;
  std::size_t size() const { return segment_seeds.size() + loop_seeds.size(); }
};

inline SeedPlan seed_plan(const conformal::AirfoilParams& p, int n) {
  if (n < 2) throw ParameterError("seed_plan: n must be >= 2");
  SeedPlan plan;
  const double u0 = limitsets::segment_u0(p);
  for (int j = 0; j < n; ++j) {
    double mid = std::cos((j + 0.5) * pi / n);
    if (mid < u0) break;
    plan.segment_brackets.emplace_back(limitsets::u_inverse(p, std::cos((j + 1.0) * pi / n)),
                                       limitsets::u_inverse(p, std::cos(j * pi / n)));
    plan.segment_seeds.push_back(limitsets::u_inverse(p, mid));
  }
  if (limitsets::classify(p).tag == limitsets::Case::Supercritical) {
    limitsets::LoopLbPlus loop = limitsets::loop_points(p, 2);
    for (int k = 0; k < n; ++k) {
      double t = 2.0 * pi * k / n;
      double off = angle_2pi(t - loop.start_angle);
      if (off > 0.0 && off < loop.sweep) plan.loop_seeds.push_back(conformal::phi_b_inverse(p, std::polar(1.0, t)));
    }
    // Both families crowd i_b; drop the seeds nearest to it until at most n remain.
    while (plan.size() > static_cast<std::size_t>(n)) {
      double d_seg = plan.segment_seeds.empty() ? INFINITY : std::abs(plan.segment_seeds.back() - loop.corner);
      auto near = std::min_element(plan.loop_seeds.begin(), plan.loop_seeds.end(), [&](cplx x, cplx y) {
        return std::abs(x - loop.corner) < std::abs(y - loop.corner);
      });
      if (near != plan.loop_seeds.end() && std::abs(*near - loop.corner) < d_seg) {
        plan.loop_seeds.erase(near);
      } else {
        plan.segment_seeds.pop_back();
        plan.segment_brackets.pop_back();
      }
    }
  }
  return plan;
}

namespace detail {

/// Real-case segment zero by bisection on the sign of the real residual.
inline std::optional<NewtonOutcome> bisect_real(const conformal::AirfoilParams& p, int n, double lo, double hi) {
  auto f = [&](double x) { return polynomials::residual(p, n, cplx(x, 0.0)).value.real(); };
  try {
    double flo = f(lo), fhi = f(hi);
    if (flo == 0.0) return NewtonOutcome{lo, 0.0, true};
    if (fhi == 0.0) return NewtonOutcome{hi, 0.0, true};
    if ((flo > 0.0) == (fhi > 0.0)) return std::nullopt;
    for (int it = 0; it < 200 && hi - lo > 4e-16 * std::max(1.0, std::abs(lo)); ++it) {
      double mid = 0.5 * (lo + hi);
      double fm = f(mid);
      if (fm == 0.0) {
        lo = hi = mid;
        break;
      }
      if ((fm > 0.0) == (flo > 0.0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    double x = 0.5 * (lo + hi);
    double rel = polynomials::residual(p, n, cplx(x, 0.0)).relative();
    return NewtonOutcome{cplx(x, 0.0), rel, rel < kResidualGate};
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

inline bool is_new(const std::vector<cplx>& found, cplx z) {
  for (cplx f : found)
    if (std::abs(f - z) < kDedupDistance) return false;
  return true;
}

/// Starting points for the m missing zeros from their first two power sums,
/// which are known: sum z_j = n b/2 and sum z_j^2 = n (b^2 + 2)/4 over all zeros.
inline std::vector<cplx> recover_deficit(const conformal::AirfoilParams& p, int n, const std::vector<cplx>& found) {
  const int m = n - static_cast<int>(found.size());
  if (m <= 0) return {};
  const cplx b = p.b();
  cplx s1 = static_cast<double>(n) * b / 2.0, s2 = static_cast<double>(n) * (b * b + 2.0) / 4.0;
  for (cplx f : found) {
    s1 -= f;
    s2 -= f * f;
  }
  cplx center = s1 / static_cast<double>(m);
  double spread = std::sqrt(std::abs(s2 / static_cast<double>(m) - center * center));
  spread = std::max(spread, 1e-3);
  std::vector<cplx> z = circle_guesses(m, center, spread);
  if (m == 1) z[0] = center;
  return aberth_residual(p, n, std::move(z), found, 300);
}

}  // namespace detail

/// Zeros of F_n by Newton on the residual equation from the seed plan,
/// bisection on real brackets in the real case, and a frozen-root Aberth
/// sweep for any zeros the seeds miss.
inline ZeroSet roots_seeded(const conformal::AirfoilParams& p, int n) {
  SeedPlan plan = seed_plan(p, n);
  const bool real_case = p.is_real();
  const std::size_t ns = plan.segment_seeds.size();
  std::vector<NewtonOutcome> out(plan.size());
  parallel_for(plan.size(), [&](std::size_t i) {
    if (i < ns) {
      if (real_case) {
        auto [lo, hi] = plan.segment_brackets[i];
        auto r = detail::bisect_real(p, n, std::min(lo.real(), hi.real()), std::max(lo.real(), hi.real()));
        if (r && r->ok) {
          out[i] = *r;
          return;
        }
      }
      out[i] = newton_residual(p, n, plan.segment_seeds[i]);
    } else {
      out[i] = newton_residual(p, n, plan.loop_seeds[i - ns]);
    }
  });
  std::vector<cplx> found;
  for (const NewtonOutcome& o : out)
    if (o.ok && detail::is_new(found, o.z)) found.push_back(o.z);
  if (static_cast<int>(found.size()) < n) {
    for (cplx z : detail::recover_deficit(p, n, found)) {
      NewtonOutcome o = newton_residual(p, n, z, 20, 1e-3);
      if (o.ok && detail::is_new(found, o.z)) found.push_back(o.z);
    }
  }
  const int missing = n - static_cast<int>(found.size());
  if (missing > 0)
    throw DeficitError("seeded zeros: " + std::to_string(missing) + " of " + std::to_string(n) + " zeros not found",
                       missing);
  if (missing < 0) throw ConvergenceError("seeded zeros: more distinct solutions than the degree");
  ZeroSet zs;
  zs.n = n;
  zs.method = Method::Seeded;
  zs.zeros = found;
  for (cplx z : found) zs.residuals.push_back(polynomials::residual(p, n, z).relative());
  finalize(zs);
  return zs;
}

struct CrossCheckReport {
  double max_distance;
  std::vector<std::pair<int, int>> pairs;  // index in a, index in b
};

/// Greedy nearest-neighbour matching. Throws MismatchError if any matched
/// pair is farther apart than tol.
inline CrossCheckReport cross_check(const ZeroSet& a, const ZeroSet& b, double tol = 1e-6) {
  if (a.zeros.size() != b.zeros.size())
    throw MismatchError("cross_check: zero sets have different sizes (" + std::to_string(a.zeros.size()) + " vs " +
                        std::to_string(b.zeros.size()) + ")");
  CrossCheckReport rep{0.0, {}};
  std::vector<char> used(b.zeros.size(), 0);
  std::string unmatched;
  for (std::size_t i = 0; i < a.zeros.size(); ++i) {
    int best = -1;
    double bd = INFINITY;
    for (std::size_t j = 0; j < b.zeros.size(); ++j) {
      if (used[j]) continue;
      double d = std::abs(a.zeros[i] - b.zeros[j]);
      if (d < bd) {
        bd = d;
        best = static_cast<int>(j);
      }
    }
    used[best] = 1;
    rep.pairs.emplace_back(static_cast<int>(i), best);
    rep.max_distance = std::max(rep.max_distance, bd);
    if (!(bd < tol)) {
      char buf[120];
      std::snprintf(buf, sizeof buf, " (%.12e, %.12e) at distance %.3e;", a.zeros[i].real(), a.zeros[i].imag(), bd);
      unmatched += buf;
    }
  }
  if (!unmatched.empty()) throw MismatchError("cross_check: unmatched zeros:" + unmatched);
  return rep;
}

/// Largest n handled by the coefficient route in auto mode.
inline constexpr int kSimultaneousMax = 60;
/// Smallest n at which auto mode also cross-checks against the seeded route.
inline constexpr int kCrossCheckMin = 30;

inline ZeroSet faber_zeros(const conformal::AirfoilParams& p, int n, SeedMethod method = SeedMethod::Auto) {
  if (n < 1) throw ParameterError("faber zeros: n must be >= 1");
  if (n == 1 || method == SeedMethod::Simultaneous) return faber_zeros_simultaneous(p, n);
  if (method == SeedMethod::Seeded) return roots_seeded(p, n);
  if (n > kSimultaneousMax) return roots_seeded(p, n);
  ZeroSet zs = faber_zeros_simultaneous(p, n);
  if (n >= kCrossCheckMin) {
    cross_check(zs, roots_seeded(p, n));
    zs.method = Method::CrossChecked;
  }
  return zs;
}

/// CSV rows "n,index,re,im,residual,class".
inline void write_zeros_csv(std::ostream& os, const ZeroSet& zs, bool header = true) {
  if (header) os << "n,index,re,im,residual,class\n";
  for (std::size_t i = 0; i < zs.zeros.size(); ++i) {
    ZeroClass c = i < zs.classes.size() ? zs.classes[i] : ZeroClass::Unclassified;
    os << zs.n << ',' << i << ',' << format_e12(zs.zeros[i].real()) << ',' << format_e12(zs.zeros[i].imag()) << ','
       << format_e12(zs.residuals[i]) << ',' << to_string(c) << '\n';
  }
}

}  // namespace faber::rootfind
