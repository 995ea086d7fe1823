#include "kernelcurve/error.hpp"
#include "kernelcurve/involutions.hpp"
#include "kernelcurve/uniform_g1.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace kc;

namespace {

struct Case {
  std::string name;
  WalkModel model;
};

std::vector<Case> genus_one_battery() {
  std::vector<Case> out{{"simple", oracles::simple_walk()},
                        {"simple_t8", oracles::simple_walk("1/8")},
                        {"simple_t2", oracles::simple_walk("1/2")},
                        {"gessel", oracles::gessel()},
                        {"kreweras", oracles::kreweras()},
                        {"kreweras_t2", oracles::kreweras("1/2")}};
  std::mt19937_64 rng(41);
  for (int n = 0; n < 6; ++n) {
    const char* t = n % 3 == 0 ? "1/8" : (n % 3 == 1 ? "1/4" : "1/2");
    out.push_back({"random" + std::to_string(n), oracles::random_genus1(rng, parse_rational(t))});
  }
  return out;
}

Complex random_w(const GenusOneUniformization& u, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> v(0.05, 0.95);
  return v(rng) * u.omega2 + v(rng) * u.omega1;
}

}  // namespace

TEST(UniformizeGenus1, SimpleWalkPeriods) {
  const KernelCurve c(oracles::simple_walk());
  const GenusOneUniformization u = uniformize_genus1(c);
  EXPECT_EQ(u.omega1.real(), 0.0);
  EXPECT_GT(u.omega1.imag(), 0.0);
  EXPECT_GT(u.omega2, 0.0);
  EXPECT_NEAR(u.omega3 / u.omega2, 0.5, 1e-8);
  EXPECT_FALSE(u.a4_at_infinity);
  EXPECT_EQ(u.period_ratio_sign, -1);
  // The same integrals by the tanh-sinh oracle on the raw discriminant.
  const double r1 = u.branch[2].affine_value()->real(), r2 = u.branch[3].affine_value()->real();
  const double r3 = u.branch[0].affine_value()->real();
  EXPECT_NEAR(u.omega1.imag(), oracles::tanh_sinh_period(u.d, std::min(r1, r2), std::max(r1, r2)), 1e-10);
  EXPECT_NEAR(u.omega2, oracles::tanh_sinh_period(u.d, std::min(r2, r3), std::max(r2, r3)), 1e-10);
}

TEST(UniformizeGenus1, LatticeInvariantsMatchTheQuartic) {
  // Two independent routes to (g2, g3): the lattice built from the period
  // integrals, and the classical invariants of D.
  for (const Case& k : genus_one_battery()) {
    const GenusOneUniformization u = uniformize_genus1(k.model);
    const auto [g2, g3] = oracles::quartic_invariants(u.d);
    EXPECT_NEAR(u.lattice.g2().real(), g2, 1e-8 * std::max(1.0, std::abs(g2))) << k.name;
    EXPECT_NEAR(u.lattice.g3().real(), g3, 1e-8 * std::max(1.0, std::abs(g2))) << k.name;
    EXPECT_NEAR(u.lattice.g2().imag(), 0.0, 1e-8) << k.name;
  }
}

TEST(UniformizeGenus1, PeriodShape) {
  for (const Case& k : genus_one_battery()) {
    const GenusOneUniformization u = uniformize_genus1(k.model);
    EXPECT_EQ(u.omega1.real(), 0.0) << k.name;
    EXPECT_GT(u.omega1.imag(), 0.0) << k.name;
    EXPECT_GT(u.omega2, 0.0) << k.name;
    EXPECT_GT(u.omega3, 0.0) << k.name;
    EXPECT_LT(u.omega3, u.omega2) << k.name;
  }
}

TEST(UniformizeGenus1, KnownPeriodRatios) {
  EXPECT_NEAR(uniformize_genus1(oracles::gessel()).omega3 / uniformize_genus1(oracles::gessel()).omega2, 0.75, 1e-8);
  const GenusOneUniformization k = uniformize_genus1(oracles::kreweras());
  EXPECT_TRUE(k.a4_at_infinity);
  EXPECT_NEAR(k.omega3 / k.omega2, 2.0 / 3.0, 1e-8);
}

TEST(LambdaMap, OnCurveOverTheParallelogram) {
  for (const Case& k : genus_one_battery()) {
    const KernelCurve c(k.model);
    const GenusOneUniformization u = uniformize_genus1(c);
    double worst = 0.0;
    for (int a = 0; a < 20; ++a)
      for (int b = 0; b < 20; ++b) {
        if (a == 0 && b == 0) continue;
        const Complex w = (a / 20.0) * u.omega2 + (b / 20.0) * u.omega1;
        worst = std::max(worst, c.residual(lambda_map(u, w)));
      }
    EXPECT_LE(worst, 1e-8) << k.name;
  }
}

TEST(LambdaMap, PeriodicityAndPullbacks) {
  for (const Case& k : genus_one_battery()) {
    const KernelCurve c(k.model);
    const GenusOneUniformization u = uniformize_genus1(c);
    std::mt19937_64 rng(18);
    for (int n = 0; n < 50; ++n) {
      const Complex w = random_w(u, rng);
      const CurvePoint p = lambda_map(u, w);
      EXPECT_LT(distance(lambda_map(u, w + u.omega1), p), 1e-7) << k.name;
      EXPECT_LT(distance(lambda_map(u, w + u.omega2), p), 1e-7) << k.name;
      EXPECT_LT(distance(lambda_map(u, -w), iota(c, 1, p)), 1e-7) << k.name;
      EXPECT_LT(distance(lambda_map(u, u.omega3 - w), iota(c, 2, p)), 1e-7) << k.name;
      EXPECT_LT(distance(lambda_map(u, w + u.omega3), sigma(c, p)), 1e-7) << k.name;
    }
  }
}

TEST(LambdaMap, ZConsistencyAndDifferentialEquation) {
  for (const Case& k : genus_one_battery()) {
    const KernelCurve c(k.model);
    const GenusOneUniformization u = uniformize_genus1(c);
    const KernelDecomposition<double>& kd = c.kernel();
    std::mt19937_64 rng(19);
    for (int n = 0; n < 100; ++n) {
      const Complex w = random_w(u, rng);
      const WeierstrassValue v = weierstrass(u.lattice, w);
      const Complex rhs = 4.0 * v.p * v.p * v.p - u.lattice.g2() * v.p - u.lattice.g3();
      EXPECT_LE(std::abs(v.dp * v.dp - rhs), 1e-7 * std::max(1.0, std::abs(rhs))) << k.name;

      const CurvePoint p = lambda_map(u, w);
      if (p.x.is_infinite(1e-6) || p.y.is_infinite(1e-6)) continue;
      const Complex x = *p.x.affine_value(), y = *p.y.affine_value();
      const Complex a = kd.a_poly[0] + x * (kd.a_poly[1] + x * kd.a_poly[2]);
      const Complex b = kd.b_poly[0] + x * (kd.b_poly[1] + x * kd.b_poly[2]);
      const Complex z = 2.0 * a * y + b;
      const Complex dx = u.d.at(x);
      EXPECT_LE(std::abs(z * z - dx), 1e-8 * std::max(std::abs(dx), std::abs(z * z)) + 1e-14) << k.name;
    }
  }
}

TEST(LambdaMap, LatticePointsGoToA4) {
  const GenusOneUniformization u = uniformize_genus1(oracles::simple_walk());
  EXPECT_LT(chordal_distance(lambda_map(u, 0.0).x, u.branch[3]), 1e-15);
  EXPECT_LT(chordal_distance(lambda_map(u, 1e-7).x, u.branch[3]), 1e-9);
  EXPECT_LT(chordal_distance(lambda_map(u, u.omega2).x, u.branch[3]), 1e-15);
}

TEST(XPartners, BranchPointsGiveDoubleRoots) {
  const KernelCurve c(oracles::gessel());
  for (const ProjPoint& b : c.branches().b) {
    const auto [x1, x2] = x_partners(c, b);
    EXPECT_LT(chordal_distance(x1, x2), 1e-6);
  }
}

TEST(XPartners, SimpleWalkContainsOne) {
  const auto [x1, x2] = x_partners(oracles::simple_walk(), ProjPoint::affine(7.0 + 4.0 * std::sqrt(3.0)));
  const double d = std::min(chordal_distance(x1, ProjPoint::affine(1.0)), chordal_distance(x2, ProjPoint::affine(1.0)));
  EXPECT_LT(d, 1e-14);
}

TEST(XPartners, TranspositionSwapsRoles) {
  const WalkModel m = oracles::gessel("1/3");
  const KernelCurve c(m), ct(m.transposed());
  const ProjPoint y = ProjPoint::affine({0.4, -1.2});
  const auto [x1, x2] = x_partners(c, y);
  const auto [p1, p2] = points_over_x(ct, y);
  const double d = std::min(chordal_distance(x1, p1.y) + chordal_distance(x2, p2.y),
                            chordal_distance(x1, p2.y) + chordal_distance(x2, p1.y));
  EXPECT_LT(d, 1e-12);
}

TEST(UniformizeGenus1, Guards) {
  try {
    uniformize_genus1(oracles::diagonal_genus0());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::WrongGenus);
  }
  const WalkModel degenerate = oracles::model_from_rows({{"1", "0", "0"}, {"0", "0", "0"}, {"0", "0", "1"}}, "1/8");
  try {
    uniformize_genus1(degenerate);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegenerateModel);
  }
}
