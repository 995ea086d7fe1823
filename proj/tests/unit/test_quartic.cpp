#include "kernelcurve/error.hpp"
#include "kernelcurve/quartic.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace kc;

namespace {

QuarticForm<double> from_roots(double lead, std::array<double, 4> roots) {
  // lead * prod (x - r), ascending coefficients.
  QuarticForm<double> f;
  f.c = {lead, 0.0, 0.0, 0.0, 0.0};
  for (double r : roots) {
    for (std::size_t k = 4; k > 0; --k) f.c[k] = f.c[k - 1] - r * f.c[k];
    f.c[0] = -r * f.c[0];
  }
  return f;
}

std::vector<double> real_parts(const std::vector<ProjectiveRoot>& roots) {
  std::vector<double> v;
  for (const auto& r : roots) v.push_back(r.root.affine_value()->real());
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST(Quartic, FourSimpleRealRoots) {
  const QuarticForm<double> f = from_roots(2.0, {-3.0, 0.5, 1.0, 7.0});
  for (double r : {-3.0, 0.5, 1.0, 7.0}) ASSERT_NEAR(f.at(r), 0.0, 1e-9);
  const auto roots = quartic_roots(f);
  ASSERT_EQ(roots.size(), 4u);
  const auto v = real_parts(roots);
  const std::array<double, 4> expected{-3.0, 0.5, 1.0, 7.0};
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(v[i], expected[i], 1e-12);
  EXPECT_FALSE(has_multiple_root(roots));
}

TEST(Quartic, DoubleRootIsMerged) {
  const auto roots = quartic_roots(from_roots(1.0, {2.0, 2.0, -1.0, 5.0}));
  ASSERT_EQ(roots.size(), 3u);
  EXPECT_TRUE(has_multiple_root(roots));
  int total = 0;
  for (const auto& r : roots) total += r.multiplicity;
  EXPECT_EQ(total, 4);
}

TEST(Quartic, VanishingLeadingCoefficientsGiveInfinity) {
  QuarticForm<double> f;
  f.c = {1.0, -3.0, 2.0, 0.0, 0.0};  // (x-1)(x-2), plus [1:0] twice
  const auto roots = quartic_roots(f);
  ASSERT_EQ(roots.size(), 3u);
  int at_inf = 0;
  for (const auto& r : roots)
    if (r.root.is_infinite()) at_inf = r.multiplicity;
  EXPECT_EQ(at_inf, 2);
}

TEST(Quartic, VanishingTrailingCoefficientsGiveZero) {
  QuarticForm<double> f;
  f.c = {0.0, 0.0, 1.0, 0.0, -35.0};  // x^2 (1 - 35 x^2)
  const auto roots = quartic_roots(f);
  ASSERT_EQ(roots.size(), 3u);
  bool saw_zero = false;
  for (const auto& r : roots)
    if (std::abs(r.root.u0()) == 0.0) {
      saw_zero = true;
      EXPECT_EQ(r.multiplicity, 2);
    } else {
      EXPECT_NEAR(std::abs(r.root.affine_value()->real()), 1.0 / std::sqrt(35.0), 1e-14);
    }
  EXPECT_TRUE(saw_zero);
}

TEST(Quartic, ComplexRoots) {
  QuarticForm<double> f;
  f.c = {1.0, 0.0, 0.0, 0.0, 1.0};  // x^4 + 1
  const auto roots = quartic_roots(f);
  ASSERT_EQ(roots.size(), 4u);
  for (const auto& r : roots) EXPECT_NEAR(std::abs(*r.root.affine_value()), 1.0, 1e-14);
}

TEST(Quartic, ZeroFormThrows) {
  QuarticForm<double> f;
  EXPECT_THROW(quartic_roots(f), Error);
}

TEST(Quadratic, RootsAndDoubleRoot) {
  // -y^2 + 14 y - 1 (as a y0^2 + b y0 y1 + c y1^2).
  const auto [r1, r2] = quadratic_roots(-1.0, 14.0, -1.0);
  const double p = r1.affine_value()->real() * r2.affine_value()->real();
  const double s = r1.affine_value()->real() + r2.affine_value()->real();
  EXPECT_NEAR(p, 1.0, 1e-14);
  EXPECT_NEAR(s, 14.0, 1e-13);
  const auto [d1, d2] = quadratic_roots(1.0, -4.0, 4.0);
  EXPECT_EQ(chordal_distance(d1, d2), 0.0);
  EXPECT_NEAR(d1.affine_value()->real(), 2.0, 1e-15);
  EXPECT_TRUE(double_root(0.0, 0.0, 3.0).is_infinite());
  EXPECT_EQ(std::abs(double_root(3.0, 0.0, 0.0).u0()), 0.0);
  EXPECT_THROW(quadratic_roots(0.0, 0.0, 0.0), Error);
}
