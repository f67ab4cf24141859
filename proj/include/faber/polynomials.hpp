#pragma once

// Faber polynomials F_n of a Joukowski airfoil, the shifted polynomials
// Fhat_n = F_n + (-b/a)^n, Chebyshev T_n, and the residual equation
//   2 T_n(U(z)) = (-b / V(z)^{1/2})^n
// whose solutions are exactly the zeros of F_n.

#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "faber/common.hpp"
#include "faber/conformal.hpp"
#include "faber/errors.hpp"
#include "faber/poly.hpp"

namespace faber::polynomials {

template <class C>
C ipow(C x, int n) {
  C r(1);
  while (n > 0) {
    if (n & 1) r *= x;
    x *= x;
    n >>= 1;
  }
  return r;
}

/// T_n(u) and T_n'(u), scaled: true values are value * exp(log_scale).
struct ChebyshevScaled {
  cplx value;
  cplx derivative;
  double log_scale;
};

/// Half-width of the strip around [-1, 1] where the recurrence is used.
inline constexpr double kRecurrenceStrip = 1e-3;

inline bool in_recurrence_region(cplx u) {
  return std::abs(u.imag()) <= kRecurrenceStrip && std::abs(u.real()) <= 1.0 + kRecurrenceStrip;
}

/// Three-term recurrence near [-1, 1]; dominant-branch power form elsewhere,
/// scaled by |w|^n with w = u + sqrt(u^2 - 1), |w| > 1.
inline ChebyshevScaled chebyshev_scaled(int n, cplx u) {
  if (n == 0) return {1.0, 0.0, 0.0};
  if (in_recurrence_region(u)) {
    // T_k and U_{k-1}; T_n' = n U_{n-1}
    cplx t_prev = 1.0, t = u;
    cplx s_prev = 0.0, s = 1.0;
    for (int k = 1; k < n; ++k) {
      cplx t_next = 2.0 * u * t - t_prev;
      cplx s_next = 2.0 * u * s - s_prev;
      t_prev = t;
      t = t_next;
      s_prev = s;
      s = s_next;
    }
    return {t, static_cast<double>(n) * s, 0.0};
  }
  cplx w = u + conformal::sqrt_z2m1(u);
  cplx logw = std::log(w);
  double L = n * logw.real();
  cplx head = std::polar(1.0, n * logw.imag());    // w^n / |w|^n
  cplx tail = std::polar(std::exp(-2.0 * L), -n * logw.imag());  // w^-n / |w|^n
  return {0.5 * (head + tail), static_cast<double>(n) * (head - tail) / (w - 1.0 / w), L};
}

/// Chebyshev polynomial of the first kind.
inline cplx chebyshev_T(int n, cplx u) {
  if (n < 0) throw ParameterError("chebyshev_T: n must be >= 0");
  ChebyshevScaled t = chebyshev_scaled(n, u);
  return t.log_scale == 0.0 ? t.value : t.value * std::exp(t.log_scale);
}

inline cplx chebyshev_T_derivative(int n, cplx u) {
  ChebyshevScaled t = chebyshev_scaled(n, u);
  return t.log_scale == 0.0 ? t.derivative : t.derivative * std::exp(t.log_scale);
}

/// Monomial coefficients of F_n in precision Real, from the homogeneous
/// Chebyshev recurrence H_0 = 1, H_1 = W, H_{k+1} = 2 W H_k - V H_{k-1},
/// where H_n = V^{n/2} T_n(W / V^{1/2}); then F_n = 2 a^{-n} H_n - (-b/a)^n.
template <class Real>
BasicPolyCoeffs<Real> faber_coefficients(const conformal::AirfoilParams& p, int n, bool shifted = false) {
  using C = complex_t<Real>;
  if (n < 0) throw ParameterError("faber: n must be >= 0");
  if (n == 0) return BasicPolyCoeffs<Real>{{C(1)}};
  const C b = to_complex<Real>(p.b());
  const C a = to_complex<Real>(p.a());
  const C one(1), two(2);
  // W = -b + z, V = (b^2 + 1) - 2b z
  const C w0 = -b, v0 = b * b + one, v1 = -two * b;
  std::vector<C> h_prev{one};
  std::vector<C> h{w0, one};
  for (int k = 1; k < n; ++k) {
    std::vector<C> next(k + 2, C(0));
    for (int j = 0; j <= k; ++j) {
      next[j] += two * w0 * h[j];
      next[j + 1] += two * h[j];
    }
    for (int j = 0; j < k; ++j) {
      next[j] -= v0 * h_prev[j];
      next[j + 1] -= v1 * h_prev[j];
    }
    h_prev = std::move(h);
    h = std::move(next);
  }
  const C inv_a = one / a;
  const C scale = two * ipow(inv_a, n);
  BasicPolyCoeffs<Real> out;
  out.coeffs.resize(n + 1);
  for (int j = 0; j <= n; ++j) out.coeffs[j] = scale * h[j];
  if (!shifted) out.coeffs[0] -= ipow(-b * inv_a, n);
  return out;
}

namespace detail {
inline PolyCoeffs checked_to_double(const BasicPolyCoeffs<quad>& q, int n) {
  PolyCoeffs out = to_double(q);
  for (const cplx& c : out.coeffs)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw OverflowError("faber coefficients of degree " + std::to_string(n) +
                          " exceed double range; use FaberEvaluator");
  return out;
}
}  // namespace detail

/// Coefficients of F_n, computed in quad precision and rounded once.
inline PolyCoeffs faber_closed(const conformal::AirfoilParams& p, int n) {
  if (n < 1) throw ParameterError("faber_closed: n must be >= 1");
  return detail::checked_to_double(faber_coefficients<quad>(p, n), n);
}

/// Coefficients of the shifted polynomial Fhat_n = F_n + (-b/a)^n.
inline PolyCoeffs shifted_faber_closed(const conformal::AirfoilParams& p, int n) {
  if (n < 1) throw ParameterError("shifted_faber_closed: n must be >= 1");
  return detail::checked_to_double(faber_coefficients<quad>(p, n, true), n);
}

/// Sampling radius of the oracle. Any radius > 1 sees the same Laurent series.
inline constexpr double kOracleRadius = 1.5;

/// Independent oracle: F_n is the polynomial part of Phi(z)^n. Samples
/// Phi^n on |z| = 1.5 and extracts the powers 0..n by a discrete Fourier
/// transform, doubling the grid until the coefficients settle.
inline PolyCoeffs faber_oracle(const conformal::AirfoilParams& p, int n) {
  if (n < 0) throw ParameterError("faber_oracle: n must be >= 0");
  if (n == 0) return PolyCoeffs{{cplx(1.0)}};
  const double rho = kOracleRadius;
  auto laurent_phi = [&](cplx z) {
    cplx zeta = z * (1.0 + std::sqrt(1.0 - 1.0 / (z * z)));
    return (zeta - p.b()) / p.a();
  };
  auto extract = [&](int N) {
    std::vector<cplx> f(N), roots(N);
    for (int j = 0; j < N; ++j) {
      roots[j] = std::polar(1.0, -2.0 * pi * j / N);
      f[j] = ipow(laurent_phi(rho * std::polar(1.0, 2.0 * pi * j / N)), n);
    }
    PolyCoeffs out;
    out.coeffs.resize(n + 1);
    double rk = 1.0;
    for (int k = 0; k <= n; ++k) {
      cplx acc = 0.0;
      for (int j = 0; j < N; ++j) acc += f[j] * roots[(static_cast<long long>(j) * k) % N];
      out.coeffs[k] = acc / (static_cast<double>(N) * rk);
      rk *= rho;
    }
    return out;
  };
  int N = 64;
  while (N < 8 * n) N *= 2;
  PolyCoeffs prev = extract(N);
  while (N < (1 << 16)) {
    N *= 2;
    PolyCoeffs next = extract(N);
    if (normwise_deviation(next, prev) < 1e-12) return next;
    prev = std::move(next);
  }
  throw ResolutionError("faber_oracle: coefficients did not settle by 65536 samples (n = " +
                        std::to_string(n) + ")");
}

/// Closed-form evaluation of F_n without coefficients:
/// F_n = a^{-n} [(zeta - b)^n + (1/zeta - b)^n - (-b)^n], zeta any Joukowski preimage.
class FaberEvaluator {
 public:
  FaberEvaluator(conformal::AirfoilParams params, int n) : params_(std::move(params)), n_(n) {
    if (n < 1) throw ParameterError("FaberEvaluator: n must be >= 1");
  }

  cplx operator()(cplx z) const {
    auto [z1, z2] = conformal::joukowski_preimages(z);
    cplx b = params_.b();
    cplx sum = ipow(z1 - b, n_) + ipow(z2 - b, n_) - ipow(-b, n_);
    return sum * ipow(1.0 / params_.a(), n_);
  }

  /// Fhat_n(z) = 2 a^{-n} V^{n/2} T_n(U(z)); independent of the root branch.
  cplx shifted(cplx z) const {
    conformal::UVW f = conformal::uvw(params_, z);
    return 2.0 * ipow(1.0 / params_.a(), n_) * ipow(f.sqrtV, n_) * chebyshev_T(n_, f.U);
  }

  int degree() const { return n_; }
  const conformal::AirfoilParams& params() const { return params_; }

 private:
  conformal::AirfoilParams params_;
  int n_;
};

/// Residual of 2 T_n(U) = q^n with q = -b / V^{1/2}, and its z-derivative.
/// Both are stored scaled by exp(-log_scale) so large n never overflows.
struct Residual {
  cplx value;
  cplx derivative;
  double log_scale;
  double rhs_log_modulus;  // n log|q|

  cplx newton_step() const { return value / derivative; }
  cplx unscaled() const { return value * std::exp(log_scale); }
  /// |residual| / (2 + |q|^n)
  double relative() const {
    return std::abs(value) / (2.0 * std::exp(-log_scale) + std::exp(rhs_log_modulus - log_scale));
  }
};

inline Residual residual(const conformal::AirfoilParams& p, int n, cplx z) {
  conformal::UVW f = conformal::uvw(p, z);
  const cplx b = p.b();
  const cplx q = -b / f.sqrtV;
  const cplx logq = std::log(q);
  const double lq = n * logq.real();
  ChebyshevScaled t = chebyshev_scaled(n, f.U);
  const double L = std::max(t.log_scale, lq);
  const cplx du = (f.V + b * f.W) / (f.V * f.sqrtV);
  const double ta = std::exp(t.log_scale - L);
  const cplx lhs = 2.0 * t.value * ta;
  const cplx dlhs = 2.0 * t.derivative * ta * du;
  const cplx rhs = std::exp(static_cast<double>(n) * logq - L);
  const cplx drhs = rhs * static_cast<double>(n) * b / f.V;  // q'/q = b/V
  return {lhs - rhs, dlhs - drhs, L, lq};
}

/// Refines a zero of F_n to quad precision: Newton on the residual equation
/// evaluated in quad, with the derivative taken from the double evaluation.
/// Returns nothing if the total correction would exceed max_step (1 + |z|),
/// so a point that is not already a zero to that accuracy is left alone.
inline std::optional<cquad> refine_zero_quad(const conformal::AirfoilParams& p, int n, cplx z0,
                                             double max_step = 1e-10) {
  using boost::multiprecision::abs;
  using boost::multiprecision::sqrt;
  const cquad one(1), two(2);
  const cquad b = to_complex<quad>(p.b());
  const cquad c = (b + one / b) / two;
  const cquad rot = to_complex<quad>(-p.cut_direction());
  cquad factor = sqrt(-two * b) * sqrt(rot);
  cplx at_one = to_cplx(factor * sqrt((one - c) / rot));
  if (std::abs(at_one - p.sqrt_v(1.0)) > std::abs(at_one + p.sqrt_v(1.0))) factor = -factor;
  cquad z = to_complex<quad>(z0);
  double moved = 0.0;
  for (int it = 0; it < 4; ++it) {
    cquad sv = factor * sqrt((z - c) / rot);
    cquad u = (z - b) / sv;
    cquad root = sqrt(u - one) * sqrt(u + one);
    cquad w = u + root;
    if (abs(w) < quad(1)) w = u - root;
    cquad wn = ipow(w, n);
    cquad r = wn + one / wn - ipow(-b / sv, n);
    Residual rd;
    try {
      rd = residual(p, n, to_cplx(z));
    } catch (const DomainError&) {
      return std::nullopt;
    }
    cplx step = to_cplx(r * boost::multiprecision::exp(quad(-rd.log_scale))) / rd.derivative;
    if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) return std::nullopt;
    moved += std::abs(step);
    if (moved > max_step * (1.0 + std::abs(z0))) return std::nullopt;
    z -= to_complex<quad>(step);
    if (std::abs(step) <= 1e-32 * (1.0 + std::abs(z0))) break;
  }
  return z;
}

/// F_n'(z) / F_n(z) through the residual: F_n = a^{-n} V^{n/2} r.
inline cplx faber_log_derivative(const conformal::AirfoilParams& p, int n, cplx z) {
  Residual r = residual(p, n, z);
  conformal::UVW f = conformal::uvw(p, z);
  return r.derivative / r.value - static_cast<double>(n) * p.b() / f.V;
}

}  // namespace faber::polynomials
