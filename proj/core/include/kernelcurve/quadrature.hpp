#pragma once

#include "kernelcurve/kernel.hpp"

#include <cmath>
#include <functional>
#include <vector>

namespace kc {

/// Nodes and weights on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point rule, computed once per n by Newton iteration on P_n.
const GaussLegendreRule& gauss_legendre(int n);

double integrate_fixed(const std::function<double(double)>& f, double a, double b, int n = 32);

/// Gauss-Legendre with adaptive bisection: an interval is accepted when the
/// one-panel and two-panel estimates agree to `abs_tol`.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b, double abs_tol,
                          int max_depth = 40);

enum class IntegrandKind {
  AbsSqrt,  // 1 / sqrt(|D|), D < 0 on the interval
  Sqrt,     // 1 / sqrt(D),   D > 0 on the interval
};

inline constexpr double kPeriodTol = 1e-10;

/// Integral of dx / sqrt(|D(x)|) between two consecutive simple real roots
/// lo < hi of D (coefficients ascending in x), after x = lo + (hi-lo) sin^2(t)
/// removes both endpoint singularities.
/// Throws NonRootEndpoints, SignMismatch.
double period_integral(const QuarticForm<double>& d, double lo, double hi, IntegrandKind kind,
                       double abs_tol = kPeriodTol);

/// Integral of dx / sqrt(|D(x)|) from a simple real root `root` of D to a
/// point `end` (either side) with D of constant sign in between, after
/// x = root + (end-root) sin^2(t). Returns a nonnegative value.
double root_to_point_integral(const QuarticForm<double>& d, double root, double end,
                              double abs_tol = kPeriodTol);

/// The form u^4 D(p + 1/u): the chart u = 1/(x - p) of P^1 sending p to
/// infinity and infinity to 0.
QuarticForm<double> mobius_chart(const QuarticForm<double>& d, double p);

}  // namespace kc
