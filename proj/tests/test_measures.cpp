#include <gtest/gtest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <vector>

#include "faber/conformal.hpp"
#include "faber/errors.hpp"
#include "faber/limitsets.hpp"
#include "faber/measures.hpp"
#include "faber/rootfind.hpp"

using namespace faber;
using namespace faber::measures;

namespace {

const double kPresets[][2] = {{1.26, 0.0}, {2.1, 0.0}, {2.1, 0.2}, {1.45, 0.2}};

// (1/N) sum_j Psi(e^{2 pi i j/N})^k, the trapezoid rule for the boundary mean.
std::vector<cplx> contour_moments(const conformal::AirfoilParams& p, int k_max, int N) {
  std::vector<cplx> m(k_max, 0.0);
  for (int j = 0; j < N; ++j) {
    cplx z = conformal::psi(p, std::polar(1.0, 2.0 * pi * j / N));
    cplx pw = z;
    for (int k = 0; k < k_max; ++k) {
      m[k] += pw;
      pw *= z;
    }
  }
  for (auto& v : m) v /= static_cast<double>(N);
  return m;
}

}  // namespace

TEST(Density, IntegratesToOne) {
  for (double R : {1.1, 1.26, 1.5}) {
    auto p = conformal::params_from(R, 0.0);
    // x = cos t, integrand times the Chebyshev weight so both share the rounded x
    double total = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        [&](double t) {
          double x = std::cos(t);
          return pullback_density(p, x) * std::sqrt((1.0 - x) * (1.0 + x));
        }, 0.0, pi, 15, 1e-14);
    EXPECT_NEAR(total, 1.0, 1e-8) << "R=" << R;
  }
}

TEST(Density, MatchesUllmanForm) {
  for (double R : {1.1, 1.26, 1.5}) {
    auto p = conformal::params_from(R, 0.0);
    double alpha = (R - 1.0) / 2.0;
    for (int i = 0; i < 1000; ++i) {
      double x = -1.0 + 2.0 * (i + 0.5) / 1000.0;
      double u = ullman_density(alpha, x), v = pullback_density(p, x);
      EXPECT_LT(std::abs(u - v) / u, 1e-12);
    }
  }
}

TEST(Density, PositiveOnOpenInterval) {
  for (double R : {1.01, 1.2, 1.4, 1.5}) {
    auto p = conformal::params_from(R, 0.0);
    for (double x : {-0.999999, -0.5, 0.0, 0.7, 0.999999}) EXPECT_GT(pullback_density(p, x), 0.0);
  }
}

TEST(Density, PreconditionErrors) {
  EXPECT_THROW(pullback_density(conformal::params_from(2.1, 0.2), 0.0), ParameterError);
  EXPECT_THROW(pullback_density(conformal::params_from(1.26, 0.0), 1.0), DomainError);
  EXPECT_THROW(ullman_density(0.1, -1.0), DomainError);
}

TEST(GaussLegendre, ExactForLowDegree) {
  GaussRule g = gauss_legendre(12);
  double wsum = 0.0;
  for (double w : g.weights) wsum += w;
  EXPECT_NEAR(wsum, 2.0, 1e-14);
  for (int k = 0; k <= 23; ++k) {
    double s = 0.0;
    for (std::size_t i = 0; i < g.nodes.size(); ++i) s += g.weights[i] * std::pow(g.nodes[i], k);
    double want = k % 2 ? 0.0 : 2.0 / (k + 1);
    EXPECT_NEAR(s, want, 1e-14) << "k=" << k;
  }
}

TEST(Predicted, MassesSumToOne) {
  for (double R : {1.1, 1.5, 1.7, 2.1, 3.5})
    for (double th : {0.0, 0.2, -0.35}) {
      if (R * std::cos(th) <= 1.0) continue;
      auto p = conformal::params_from(R, th);
      PredictedMeasure pm = predicted(p);
      EXPECT_NEAR(pm.mass_segment + pm.mass_loop, 1.0, 1e-10);
      EXPECT_NEAR(pm.segment.mass(), pm.mass_segment, 1e-10);
      EXPECT_NEAR(pm.loop.mass(), pm.mass_loop, 1e-10);
    }
}

TEST(Predicted, ReferenceMassSplit) {
  PredictedMeasure pm = predicted(conformal::params_from(2.1, 0.0));
  EXPECT_EQ(pm.case_tag, limitsets::Case::Supercritical);
  EXPECT_NEAR(pm.mass_loop, 0.6996, 1e-4);
  EXPECT_NEAR(pm.mass_loop, limitsets::loop_mass(conformal::params_from(2.1, 0.0)), 1e-14);
  PredictedMeasure sub = predicted(conformal::params_from(1.45, 0.2));
  EXPECT_EQ(sub.mass_loop, 0.0);
  EXPECT_TRUE(sub.loop.nodes.empty());
}

TEST(Moments, ClosedFormMatchesContourTrapezoid) {
  for (auto& q : kPresets) {
    auto p = conformal::params_from(q[0], q[1]);
    MomentVector eq = equilibrium_moments(p, 12);
    std::vector<cplx> tr = contour_moments(p, 12, 4096);
    for (int k = 1; k <= 12; ++k)
      EXPECT_NEAR(std::abs(eq.at(k) - tr[k - 1]), 0.0, 1e-10 * std::max(1.0, std::abs(tr[k - 1]))) << "k=" << k;
  }
}

TEST(Moments, FirstMomentIsHalfB) {
  for (auto& q : kPresets) {
    auto p = conformal::params_from(q[0], q[1]);
    EXPECT_NEAR(std::abs(equilibrium_moments(p, 1).at(1) - p.b() / 2.0), 0.0, 1e-15);
  }
}

TEST(Moments, PredictedMeasureHasEquilibriumMoments) {
  // two routes to mu_K: transported densities vs the boundary mean of Psi^k
  for (auto& q : kPresets) {
    auto p = conformal::params_from(q[0], q[1]);
    MomentVector pre = predicted_moments(predicted(p), 20);
    MomentVector eq = equilibrium_moments(p, 20);
    for (int k = 1; k <= 20; ++k)
      EXPECT_NEAR(std::abs(pre.at(k) - eq.at(k)), 0.0, 1e-9 * std::max(1.0, std::abs(eq.at(k)))) << "k=" << k;
  }
}

TEST(Moments, RejectBadOrder) {
  EXPECT_THROW(equilibrium_moments(conformal::params_from(2.1, 0.0), 0), ParameterError);
}

TEST(Quadrature, ExactIdentityForFaberZeros) {
  for (auto& q : kPresets) {
    auto p = conformal::params_from(q[0], q[1]);
    for (int n : {5, 25, 60, 100}) {
      auto zs = rootfind::faber_zeros(p, n);
      EXPECT_LT(max_relative_quadrature_residual(p, zs), default_tol_quad(n)) << q[0] << "," << q[1] << " n=" << n;
    }
  }
}

TEST(Quadrature, PerturbedZeroFails) {
  auto p = conformal::params_from(2.1, 0.2);
  auto zs = rootfind::faber_zeros(p, 20);
  zs.zeros[3] += cplx(1e-3, 0.0);
  EXPECT_GT(max_relative_quadrature_residual(p, zs), 1e-4);
}

TEST(Quadrature, ToleranceSchedule) {
  EXPECT_EQ(default_tol_quad(60), 1e-6);
  EXPECT_EQ(default_tol_quad(61), 1e-4);
}

TEST(WeakStar, PredictedAgainstItselfIsZero) {
  for (auto& q : kPresets) {
    PredictedMeasure pm = predicted(conformal::params_from(q[0], q[1]));
    WeakStarDistance d = weak_star_distance(pm, pm);
    EXPECT_EQ(d.moment_dist, 0.0);
    EXPECT_EQ(d.cdf_dist, 0.0);
  }
}

TEST(WeakStar, SubcriticalCdfDecreases) {
  auto p = conformal::params_from(1.26, 0.0);
  PredictedMeasure pm = predicted(p);
  auto z25 = rootfind::faber_zeros(p, 25), z100 = rootfind::faber_zeros(p, 100);
  double d25 = weak_star_distance(p, z25, pm).cdf_dist, d100 = weak_star_distance(p, z100, pm).cdf_dist;
  EXPECT_LT(d100, d25);
  EXPECT_LT(d25, 0.1);
}

TEST(WeakStar, SubcriticalCdfIsArcsineKolmogorovDistance) {
  // independent route: U(z_j) against the arcsine CDF (1/pi)(pi/2 + asin x)
  auto p = conformal::params_from(1.26, 0.0);
  auto zs = rootfind::faber_zeros(p, 40);
  std::vector<double> u;
  for (cplx z : zs.zeros) u.push_back(std::clamp(conformal::uvw(p, z).U.real(), -1.0, 1.0));
  std::sort(u.begin(), u.end());
  double ks = 0.0;
  const double n = static_cast<double>(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    double F = (pi / 2 + std::asin(u[i])) / pi;
    ks = std::max({ks, (i + 1) / n - F, F - i / n});
  }
  EXPECT_NEAR(weak_star_distance(p, zs, predicted(p)).cdf_dist, ks, 1e-12);
}

TEST(WeakStar, ConvergenceMonotoneWithOneSmallInversion) {
  for (auto& q : kPresets) {
    auto p = conformal::params_from(q[0], q[1]);
    PredictedMeasure pm = predicted(p);
    std::vector<double> d;
    for (int n : {25, 50, 100}) d.push_back(weak_star_distance(p, rootfind::faber_zeros(p, n), pm).cdf_dist);
    int inversions = 0;
    for (std::size_t i = 1; i < d.size(); ++i)
      if (d[i] >= d[i - 1]) {
        ++inversions;
        EXPECT_LE(d[i], 1.1 * d[i - 1]);
      }
    EXPECT_LE(inversions, 1);
  }
}

TEST(Classify, MassSplitAtSeventy) {
  auto p = conformal::params_from(2.1, 0.0);
  auto zs = rootfind::faber_zeros(p, 70);
  ClassCounts c = classify_zeros(p, zs);
  EXPECT_NEAR(c.loop / 70.0, 0.6996, 2.0 / std::sqrt(70.0));
  EXPECT_EQ(c.segment + c.loop + c.other, 70);
  EXPECT_EQ(zs.classes.size(), 70u);
}

TEST(Potential, DecreasesAtFixedExteriorPoint) {
  auto p = conformal::params_from(1.26, 0.0);
  double prev = INFINITY;
  for (int n : {20, 40, 60}) {
    double d = potential_check(p, rootfind::faber_zeros(p, n), {cplx(3.0, 0.0)})[0];
    if (n == 60) EXPECT_LT(d, 0.05);
    EXPECT_LT(d, prev + 1e-15);
    prev = d;
  }
}

TEST(Potential, FarFieldAgrees) {
  auto p = conformal::params_from(2.1, 0.2);
  for (int n : {1, 3, 30}) {
    double d = potential_check(p, rootfind::faber_zeros(p, n), {cplx(1e6, 0.0), cplx(0.0, -1e6)})[0];
    EXPECT_LT(d, 1e-4);
  }
}

TEST(Potential, InteriorOrNearPointsRejected) {
  auto p = conformal::params_from(2.1, 0.2);
  auto zs = rootfind::faber_zeros(p, 10);
  EXPECT_THROW(potential_check(p, zs, {cplx(0.0, 0.0)}), DomainError);
  cplx near = conformal::psi(p, cplx(0.0, 1.02));
  EXPECT_THROW(potential_check(p, zs, {near}), DomainError);
}

TEST(Potential, TestPointsSitAtTheMargin) {
  for (auto& q : kPresets) {
    auto p = conformal::params_from(q[0], q[1]);
    auto pts = exterior_test_points(p);
    ASSERT_EQ(pts.size(), 8u);
    for (cplx z : pts) {
      EXPECT_GE(boundary_distance(p, z), kPotentialMargin);
      EXPECT_LT(boundary_distance(p, z), kPotentialMargin + 1e-4);
    }
  }
}

TEST(Report, JsonSchema) {
  auto p = conformal::params_from(2.1, 0.0);
  auto zs = rootfind::faber_zeros(p, 30);
  auto j = to_json(diagnose(p, zs, predicted(p)));
  for (const char* key : {"n", "case", "masses", "moment_dist", "cdf_dist", "quad_max_residual", "potential_max_dev",
                          "counts"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["case"], "supercritical");
  EXPECT_TRUE(j["counts"].contains("other"));
  EXPECT_EQ(j["counts"]["segment"].get<int>() + j["counts"]["loop"].get<int>() + j["counts"]["other"].get<int>(), 30);
}
