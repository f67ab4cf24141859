#include <gtest/gtest.h>

#include <cmath>
#include <sstream>
#include <string>

#include "faber/conformal.hpp"
#include "faber/errors.hpp"
#include "faber/polynomials.hpp"
#include "faber/rootfind.hpp"

using namespace faber;
using namespace faber::rootfind;

namespace {

const double kPresets[][2] = {{1.26, 0.0}, {2.1, 0.0}, {2.1, 0.2}, {1.45, 0.2}};

}  // namespace

TEST(Aberth, KnownPolynomial) {
  // (z - 1)(z - 2)(z + i) = z^3 + (i - 3) z^2 + (2 - 3i) z + 2i
  PolyCoeffs p;
  p.coeffs = {cplx(0.0, 2.0), cplx(2.0, -3.0), cplx(-3.0, 1.0), cplx(1.0)};
  ZeroSet zs = roots_simultaneous(p);
  ASSERT_EQ(zs.zeros.size(), 3u);
  EXPECT_NEAR(std::abs(zs.zeros[0] - cplx(0.0, -1.0)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(zs.zeros[1] - cplx(1.0)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(zs.zeros[2] - cplx(2.0)), 0.0, 1e-12);
}

TEST(FaberZeros, DegreeOneIsHalfB) {
  auto p = conformal::params_from(2.1, 0.2);
  ZeroSet zs = faber_zeros(p, 1);
  ASSERT_EQ(zs.zeros.size(), 1u);
  EXPECT_NEAR(std::abs(zs.zeros[0] - p.b() / 2.0), 0.0, 1e-15);
}

TEST(FaberZeros, VietaSumMatchesCoefficients) {
  // sum z_j = -c_{n-1} / c_n of the coefficient vector
  for (auto& q : kPresets) {
    auto p = conformal::params_from(q[0], q[1]);
    for (int n : {5, 17, 40}) {
      PolyCoeffs f = polynomials::faber_closed(p, n);
      cplx want = -f.coeffs[n - 1] / f.coeffs[n];
      ZeroSet zs = faber_zeros(p, n);
      cplx sum = 0.0;
      for (cplx z : zs.zeros) sum += z;
      EXPECT_NEAR(std::abs(sum - want), 0.0, 1e-11 * n);
    }
  }
}

TEST(FaberZeros, ZerosAreZerosOfTheCoefficientPolynomial) {
  for (auto& q : kPresets) {
    auto p = conformal::params_from(q[0], q[1]);
    const int n = 12;
    PolyCoeffs f = polynomials::faber_closed(p, n);
    for (cplx z : faber_zeros(p, n).zeros) {
      double scale = 0.0;
      for (int j = 0; j <= n; ++j) scale += std::abs(f.coeffs[j]) * std::pow(std::abs(z), j);
      EXPECT_LT(std::abs(f(z)) / scale, 1e-13);
    }
  }
}

TEST(FaberZeros, SeededAgreesWithSimultaneous) {
  for (auto& q : kPresets) {
    auto p = conformal::params_from(q[0], q[1]);
    for (int n : {2, 7, 20, 45, 60}) {
      ZeroSet a = faber_zeros(p, n, SeedMethod::Simultaneous);
      ZeroSet b = faber_zeros(p, n, SeedMethod::Seeded);
      CrossCheckReport rep = cross_check(a, b, 1e-9);
      EXPECT_LT(rep.max_distance, 1e-9) << q[0] << "," << q[1] << " n=" << n;
    }
  }
}

TEST(FaberZeros, ResidualGateHolds) {
  for (auto& q : kPresets) {
    auto p = conformal::params_from(q[0], q[1]);
    for (int n : {3, 30, 61, 150, 300}) {
      ZeroSet zs = faber_zeros(p, n);
      EXPECT_EQ(static_cast<int>(zs.zeros.size()), n);
      EXPECT_LT(zs.max_residual(), kResidualGate);
      for (bool c : zs.clustered) EXPECT_FALSE(c);
    }
  }
}

TEST(FaberZeros, AutoMethodByDegree) {
  auto p = conformal::params_from(2.1, 0.0);
  EXPECT_EQ(faber_zeros(p, 10).method, Method::Simultaneous);
  EXPECT_EQ(faber_zeros(p, 40).method, Method::CrossChecked);
  EXPECT_EQ(faber_zeros(p, 61).method, Method::Seeded);
}

TEST(FaberZeros, SubcriticalRealZerosOnTheInterval) {
  auto p = conformal::params_from(1.26, 0.0);
  for (int n : {20, 70, 200}) {
    ZeroSet zs = faber_zeros(p, n);
    for (cplx z : zs.zeros) {
      EXPECT_LT(std::abs(z.imag()), 1e-8);
      EXPECT_LE(std::abs(z.real()), 1.0);
    }
  }
}

TEST(FaberZeros, RealCoefficientsGiveConjugateSymmetry) {
  auto p = conformal::params_from(2.1, 0.0);
  ZeroSet zs = faber_zeros(p, 50);
  for (cplx z : zs.zeros) {
    double best = INFINITY;
    for (cplx w : zs.zeros) best = std::min(best, std::abs(w - std::conj(z)));
    EXPECT_LT(best, 1e-10);
  }
}

TEST(FaberZeros, IndependentOfThreadCount) {
  auto p = conformal::params_from(2.1, 0.2);
  setenv("FABER_THREADS", "1", 1);
  ZeroSet a = faber_zeros(p, 45), c = faber_zeros(p, 90);
  setenv("FABER_THREADS", "4", 1);
  ZeroSet b = faber_zeros(p, 45), d = faber_zeros(p, 90);
  unsetenv("FABER_THREADS");
  EXPECT_EQ(a.zeros, b.zeros);
  EXPECT_EQ(c.zeros, d.zeros);
}

TEST(FaberZeros, RejectsBadDegree) {
  auto p = conformal::params_from(2.1, 0.0);
  EXPECT_THROW(faber_zeros(p, 0), ParameterError);
  EXPECT_THROW(seed_plan(p, 1), ParameterError);
}

TEST(SeedPlan, CountsForReferencePreset) {
  auto p = conformal::params_from(2.1, 0.0);
  SeedPlan plan = seed_plan(p, 70);
  EXPECT_EQ(plan.segment_seeds.size(), 21u);
  EXPECT_EQ(plan.loop_seeds.size(), 49u);
  EXPECT_EQ(plan.size(), 70u);
  SeedPlan sub = seed_plan(conformal::params_from(1.26, 0.0), 30);
  EXPECT_EQ(sub.segment_seeds.size(), 30u);
  EXPECT_TRUE(sub.loop_seeds.empty());
}

TEST(CrossCheck, DetectsDisplacedZero) {
  auto p = conformal::params_from(2.1, 0.2);
  ZeroSet a = faber_zeros(p, 20);
  ZeroSet b = a;
  b.zeros[5] += cplx(1e-3, 0.0);
  EXPECT_THROW(cross_check(a, b), MismatchError);
  ZeroSet c = a;
  c.zeros.pop_back();
  EXPECT_THROW(cross_check(a, c), MismatchError);
}

TEST(Finalize, SortsAndFlagsClusters) {
  ZeroSet zs;
  zs.zeros = {cplx(1.0, 0.0), cplx(-1.0, 2.0), cplx(-1.0, -2.0), cplx(1.0, 1e-10)};
  zs.residuals = {1.0, 2.0, 3.0, 4.0};
  finalize(zs);
  EXPECT_EQ(zs.zeros[0], cplx(-1.0, -2.0));
  EXPECT_EQ(zs.residuals[0], 3.0);
  EXPECT_EQ(zs.zeros[3], cplx(1.0, 1e-10));
  EXPECT_TRUE(zs.clustered[2]);
  EXPECT_TRUE(zs.clustered[3]);
  EXPECT_FALSE(zs.clustered[0]);
}

TEST(ZerosCsv, SchemaAndRows) {
  auto p = conformal::params_from(1.26, 0.0);
  ZeroSet zs = faber_zeros(p, 6);
  std::ostringstream os;
  write_zeros_csv(os, zs);
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "n,index,re,im,residual,class");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    EXPECT_EQ(line.rfind("6,", 0), 0u);
  }
  EXPECT_EQ(rows, 6);
}

TEST(SeedMethodParse, Names) {
  EXPECT_EQ(parse_seed_method("seeded"), SeedMethod::Seeded);
  EXPECT_EQ(parse_seed_method("auto"), SeedMethod::Auto);
  EXPECT_THROW(parse_seed_method("newton"), ParameterError);
}
