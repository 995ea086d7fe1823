#include "kernelcurve/uniform_g1.hpp"

#include "kernelcurve/error.hpp"
#include "kernelcurve/quadrature.hpp"
#include "kernelcurve/quartic.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace kc {

namespace {

constexpr double kFibreMatchTol = 1e-6;

// Real coordinate on an affine chart of RP^1: the identity, or
// u = 1/(x - p) when an arc of interest runs through infinity.
struct Chart {
  bool mobius = false;
  double p = 0.0;

  double operator()(const ProjPoint& x) const {
    if (!mobius) return x.affine_value()->real();
    if (x.is_infinite()) return 0.0;
    return 1.0 / (x.affine_value()->real() - p);
  }
};

double real_of(const ProjPoint& x) { return x.affine_value()->real(); }

CurvePoint point_from_z(const KernelDecomposition<double>& k, Complex x0, Complex x1, Complex z) {
  const double mu = 1.0 / std::max(std::abs(x0), std::abs(x1));
  x0 *= mu;
  x1 *= mu;
  z *= mu * mu;
  const Complex a = k.a1(x0, x1), b = k.b1(x0, x1), c = k.c1(x0, x1);
  // z = -(2 Abar y + Bbar) in the chart, so y = [-(z + Bbar) : 2 Abar] = [2 Cbar : z - Bbar].
  const Complex p0 = -(z + b), p1 = 2.0 * a;
  const Complex q0 = 2.0 * c, q1 = z - b;
  const double n1 = std::max(std::abs(p0), std::abs(p1));
  const double n2 = std::max(std::abs(q0), std::abs(q1));
  return {ProjPoint(x0, x1), n1 >= n2 ? ProjPoint(p0, p1) : ProjPoint(q0, q1)};
}

bool strictly_between(double v, double a, double b) {
  const double lo = std::min(a, b), hi = std::max(a, b);
  const double margin = 1e-9 * (hi - lo);
  return v > lo + margin && v < hi - margin;
}

}  // namespace

std::pair<ProjPoint, ProjPoint> x_partners(const KernelCurve& c, const ProjPoint& y) {
  c.require_nondegenerate();
  const KernelDecomposition<double>& k = c.kernel();
  return quadratic_roots(k.a2(y.u0(), y.u1()), k.b2(y.u0(), y.u1()), k.c2(y.u0(), y.u1()));
}

std::pair<ProjPoint, ProjPoint> x_partners(const WalkModel& m, const ProjPoint& y) {
  return x_partners(KernelCurve(m), y);
}

CurvePoint lambda_map(const GenusOneUniformization& u, Complex w) {
  const QuarticForm<double>& d = u.d;
  if (u.lattice.is_lattice_point(w, 1e-14)) {
    const ProjPoint x = u.branch[3];
    return {x, double_root(u.kernel.a1(x.u0(), x.u1()), u.kernel.b1(x.u0(), x.u1()), u.kernel.c1(x.u0(), x.u1()))};
  }
  const WeierstrassValue v = weierstrass(u.lattice, w);
  if (u.a4_at_infinity) return point_from_z(u.kernel, v.p - d.c[2] / 3.0, d.c[3], -d.c[3] * v.dp / 2.0);

  const double a = real_of(u.branch[3]);
  const double d1 = d.c[1] + a * (2.0 * d.c[2] + a * (3.0 * d.c[3] + a * 4.0 * d.c[4]));
  const double d2 = 2.0 * d.c[2] + a * (6.0 * d.c[3] + a * 12.0 * d.c[4]);
  const Complex shifted = v.p - d2 / 6.0;
  return point_from_z(u.kernel, a * shifted + d1, shifted, d1 * v.dp / 2.0);
}

GenusOneUniformization uniformize_genus1(const KernelCurve& c) {
  if (c.genus() != 1) throw Error(ErrorKind::WrongGenus, "model has genus 0, expected genus 1");
  const BranchData& br = c.branches();
  const QuarticForm<double>& d = c.delta(Axis::X);
  const auto& a = br.a;

  Chart chart;
  if (a[3].is_infinite()) {
    // The arcs (a3, a4) and (a4, a1) meet at infinity; send a point of the
    // complementary arc, between a2 and a1, to infinity instead.
    chart.mobius = true;
    chart.p = 0.5 * (real_of(a[1]) + real_of(a[0]));
  }
  const QuarticForm<double> dc = chart.mobius ? mobius_chart(d, chart.p) : d;
  const double u1 = chart(a[0]), u3 = chart(a[2]), u4 = chart(a[3]);

  const double i1 = period_integral(dc, std::min(u3, u4), std::max(u3, u4), IntegrandKind::AbsSqrt);
  const double i2 = period_integral(dc, std::min(u4, u1), std::max(u4, u1), IntegrandKind::Sqrt);

  GenusOneUniformization u{.omega1 = Complex(0.0, i1),
                           .omega2 = i2,
                           .omega3 = 0.0,
                           .lattice = Lattice(Complex(0.0, i1), i2),
                           .d = d,
                           .branch = a,
                           .a4_at_infinity = a[3].is_infinite(),
                           .omega3_y = {},
                           .omega3_x = {},
                           .period_ratio_sign = std::imag(Complex(i2) / Complex(0.0, i1)) > 0.0 ? 1 : -1,
                           .kernel = c.kernel()};

  // omega3 / 2 is, modulo half-periods, the parameter of a fixed point of
  // iota2. Take one lying over the real arc (a4, a1), integrate from a4 to
  // it and decide between I and omega2 - I by evaluating Lambda.
  std::vector<double> tried;
  for (std::size_t idx : {3u, 2u, 0u, 1u}) {
    const ProjPoint b = br.b[idx];
    const ProjPoint x = x_partners(c, b).first;
    if (!x.is_real(1e-9)) continue;
    if (!chart.mobius && x.is_infinite()) continue;
    const ProjPoint xr(x.u0().real(), x.u1().real());
    const double ux = chart(xr);
    if (!strictly_between(ux, u4, u1)) continue;
    const double integral = root_to_point_integral(dc, u4, ux);
    const CurvePoint target{xr, b};
    // Lambda(+-I/2) both lie over x; the one equal to the fixed point is
    // omega3/2 modulo half-periods, giving omega3 = I or omega2 - I.
    const double e_plus = distance(lambda_map(u, integral / 2.0), target);
    const double e_minus = distance(lambda_map(u, -integral / 2.0), target);
    const double cand = e_plus <= e_minus ? integral : i2 - integral;
    tried.push_back(cand);
    if (std::min(e_plus, e_minus) <= kFibreMatchTol && cand > 0.0 && cand < i2) {
      u.omega3 = cand;
      u.omega3_y = b;
      u.omega3_x = xr;
      return u;
    }
  }
  std::string msg = "no candidate for omega3 lies in (0, omega2 = " + std::to_string(i2) + ")";
  if (!tried.empty()) {
    msg += "; candidates:";
    for (double v : tried) msg += " " + std::to_string(v);
  }
  throw Error(ErrorKind::Omega3OutOfRange, msg);
}

GenusOneUniformization uniformize_genus1(const WalkModel& m) { return uniformize_genus1(KernelCurve(m)); }

}  // namespace kc
