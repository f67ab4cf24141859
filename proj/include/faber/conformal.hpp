#pragma once

// Joukowski airfoil geometry: the exterior map Psi = J o T, its inverse Phi,
// and the auxiliary functions V, W, U and phi_b with their branch conventions.

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <utility>

#include "faber/common.hpp"
#include "faber/errors.hpp"

namespace faber::conformal {

/// Joukowski map zeta -> (zeta + 1/zeta)/2.
inline cplx joukowski(cplx zeta) { return 0.5 * (zeta + 1.0 / zeta); }

/// sqrt(z^2 - 1) with its cut on [-1, 1], behaving like z at infinity.
inline cplx sqrt_z2m1(cplx z) { return std::sqrt(z - 1.0) * std::sqrt(z + 1.0); }

/// The two Joukowski preimages of z, larger modulus first. Their product is 1.
inline std::pair<cplx, cplx> joukowski_preimages(cplx z) {
  cplx big = z + sqrt_z2m1(z);
  if (big == cplx(0.0)) return {cplx(0.0), cplx(0.0)};  // unreachable: |big| >= 1
  return {big, 1.0 / big};
}

/// The two points z on the arc parameterization at level rho:
/// z = b(1 - rho) +- sqrt(rho (1 - b^2 + b^2 rho)).
inline std::pair<cplx, cplx> arc_parameter_points(cplx b, double rho) {
  cplx mid = b * (1.0 - rho);
  cplx s = std::sqrt(rho * (1.0 - b * b + b * b * rho));
  return {mid + s, mid - s};
}

/// Validated airfoil parameters with every derived quantity.
///
/// a = R e^{i theta}, b = 1 - a, c = (b + 1/b)/2, capacity |a|/2.
/// Immutable once built; use params_from() to construct.
class AirfoilParams {
 public:
  double R() const { return R_; }
  double theta() const { return theta_; }
  cplx a() const { return a_; }
  cplx b() const { return b_; }
  cplx c() const { return c_; }
  double capacity() const { return std::abs(a_) / 2.0; }
  double rcos() const { return R_ * std::cos(theta_); }
  bool is_real() const { return theta_ == 0.0; }

  /// sqrt(V(z)) on the sheet fixed by V(1)^{1/2} = 1 - b, cut along the ray
  /// c + t * cut_direction(), t >= 0.
  cplx sqrt_v(cplx z) const { return sqrt_v_factor_ * std::sqrt((z - c_) / cut_rotation_); }
  cplx cut_direction() const { return -cut_rotation_; }

  friend AirfoilParams params_from(double R, double theta);

 private:
  AirfoilParams(double R, double theta) : R_(R), theta_(theta) {
    a_ = std::polar(R, theta);
    if (theta == 0.0) a_ = cplx(R, 0.0);
    b_ = 1.0 - a_;
    c_ = 0.5 * (b_ + 1.0 / b_);
    choose_sqrt_v_cut();
  }

  void choose_sqrt_v_cut();

  double R_;
  double theta_;
  cplx a_, b_, c_;
  cplx cut_rotation_{1.0, 0.0};
  cplx sqrt_v_factor_{1.0, 0.0};
};

/// Builds validated parameters. Throws ParameterError unless R > 1,
/// |theta| < pi/2 and R cos(theta) > 1.
inline AirfoilParams params_from(double R, double theta) {
  if (!std::isfinite(R) || !std::isfinite(theta))
    throw ParameterError("R and theta must be finite");
  if (R <= 1.0) throw ParameterError("R must exceed 1 (got " + std::to_string(R) + ")");
  if (std::abs(theta) >= pi / 2)
    throw ParameterError("theta must lie in (-pi/2, pi/2) (got " + std::to_string(theta) + ")");
  if (R * std::cos(theta) <= 1.0)
    throw ParameterError("cusp condition R cos(theta) > 1 violated (R cos theta = " +
                         std::to_string(R * std::cos(theta)) + ")");
  return AirfoilParams(R, theta);
}

inline void AirfoilParams::choose_sqrt_v_cut() {
  // Real b: the cut is (-inf, c), which never meets [-1, 1].
  // Complex b: pick the ray from c that stays farthest from the arc A.
  if (theta_ != 0.0) {
    constexpr int kRho = 201;
    std::array<cplx, 2 * kRho> arc{};
    for (int k = 0; k < kRho; ++k) {
      auto [p, m] = arc_parameter_points(b_, static_cast<double>(k) / (kRho - 1));
      arc[2 * k] = p;
      arc[2 * k + 1] = m;
    }
    double best = -1.0;
    cplx best_dir(-1.0, 0.0);
    for (int j = 0; j < 360; ++j) {
      cplx dir = std::polar(1.0, 2.0 * pi * j / 360.0);
      double dmin = INFINITY;
      for (cplx p : arc) {
        cplx d = p - c_;
        double t = std::max(0.0, std::real(d * std::conj(dir)));
        dmin = std::min(dmin, std::abs(d - t * dir));
      }
      if (dmin > best) {
        best = dmin;
        best_dir = dir;
      }
    }
    cut_rotation_ = -best_dir;
  }
  // V(z) = -2b (z - c)
  sqrt_v_factor_ = std::sqrt(-2.0 * b_) * std::sqrt(cut_rotation_);
  cplx at_one = sqrt_v(1.0);
  if (std::abs(at_one - (1.0 - b_)) > std::abs(at_one + (1.0 - b_))) sqrt_v_factor_ = -sqrt_v_factor_;
}

/// Exterior map Psi(w) = J(a w + b). Throws PoleError at w = -b/a.
inline cplx psi(const AirfoilParams& p, cplx w) {
  cplx zeta = p.a() * w + p.b();
  if (std::abs(zeta) <= 1e-300) throw PoleError("psi has a pole at w = -b/a");
  return joukowski(zeta);
}

/// Relative tolerance on |w| - 1 inside which a point counts as on the boundary.
inline constexpr double kBoundaryTolerance = 1e-12;

/// Inverse exterior map Phi(z). Of the two preimages (zeta - b)/a picks the
/// one with modulus >= 1. Boundary points return the unimodular limit;
/// interior points throw DomainError.
inline cplx phi(const AirfoilParams& p, cplx z) {
  auto [z1, z2] = joukowski_preimages(z);
  cplx w1 = (z1 - p.b()) / p.a();
  cplx w2 = (z2 - p.b()) / p.a();
  cplx w = std::abs(w1) >= std::abs(w2) ? w1 : w2;
  double m = std::abs(w);
  if (m < 1.0 - kBoundaryTolerance) throw DomainError("phi: point lies inside the airfoil");
  if (m <= 1.0 + kBoundaryTolerance) return w / m;
  return w;
}

struct UVW {
  cplx U;
  cplx V;
  cplx W;
  cplx sqrtV;
};

/// V(z) = b^2 + 1 - 2bz, W(z) = z - b and U = W / V^{1/2} with U(1) = 1.
/// Throws SingularityError at z = c where V vanishes.
inline UVW uvw(const AirfoilParams& p, cplx z) {
  cplx b = p.b();
  cplx V = b * b + 1.0 - 2.0 * b * z;
  cplx W = z - b;
  if (std::abs(z - p.c()) <= 1e-15 * (1.0 + std::abs(p.c())))
    throw SingularityError("U is singular at z = c");
  cplx s = p.sqrt_v(z);
  return {W / s, V, W, s};
}

/// U'(z) = (V + bW) / V^{3/2}.
inline cplx u_derivative(const AirfoilParams& p, cplx z) {
  UVW f = uvw(p, z);
  return (f.V + p.b() * f.W) / (f.V * f.sqrtV);
}

enum class Sheet { Plus, Minus };

struct BranchedValue {
  cplx value;
  Sheet sheet;
};

/// Tolerance on |Im U| for treating z as a point of the cut of phi_b.
inline constexpr double kCutTolerance = 1e-12;

/// sqrt(z^2 - 1) on the branch used by phi_b: cut [-1, 1] for real b and
/// the arc A (where U is real in [-1, 1]) otherwise. The Plus sheet is the
/// left side of the cut oriented from -1 to 1.
inline cplx sqrt_z2m1_on(const AirfoilParams& p, cplx z, Sheet sheet) {
  if (p.is_real()) {
    if (std::abs(z.imag()) <= kCutTolerance && std::abs(z.real()) <= 1.0) {
      double y = std::sqrt(std::max(0.0, 1.0 - z.real() * z.real()));
      return sheet == Sheet::Plus ? cplx(0.0, y) : cplx(0.0, -y);
    }
    return sqrt_z2m1(z);
  }
  // At z = c, sqrt(V) f(U) tends to W(c) because f(U) ~ U as U -> infinity.
  if (std::abs(z - p.c()) <= 1e-15 * (1.0 + std::abs(p.c()))) return z - p.b();
  UVW f = uvw(p, z);
  if (std::abs(f.U.imag()) <= kCutTolerance && std::abs(f.U.real()) <= 1.0) {
    double y = std::sqrt(std::max(0.0, 1.0 - f.U.real() * f.U.real()));
    return f.sqrtV * (sheet == Sheet::Plus ? cplx(0.0, y) : cplx(0.0, -y));
  }
  return f.sqrtV * sqrt_z2m1(f.U);
}

/// phi_b(z) = (b - z - sqrt(z^2 - 1)) / b. Off the cut both sheets agree.
inline BranchedValue phi_b(const AirfoilParams& p, cplx z, Sheet sheet = Sheet::Plus) {
  cplx b = p.b();
  return {(b - z - sqrt_z2m1_on(p, z, sheet)) / b, sheet};
}

/// The value with the other sign of the square root (the L_b^- branch).
inline cplx phi_b_other(const AirfoilParams& p, cplx z, Sheet sheet = Sheet::Plus) {
  cplx b = p.b();
  return (b - z + sqrt_z2m1_on(p, z, sheet)) / b;
}

/// phi_b^{-1}(w) = J(b (1 - w)).
inline cplx phi_b_inverse(const AirfoilParams& p, cplx w) { return joukowski(p.b() * (1.0 - w)); }

}  // namespace faber::conformal
