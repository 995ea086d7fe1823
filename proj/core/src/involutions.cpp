#include "kernelcurve/involutions.hpp"

#include "kernelcurve/error.hpp"
#include "kernelcurve/quartic.hpp"
#include "kernelcurve/uniform_g0.hpp"
#include "kernelcurve/uniform_g1.hpp"

#include <cmath>

namespace kc {

namespace {

constexpr double kOmegaSnap = 1e-9;
// The product form is used while its larger entry is at least this fraction
// of the fibre coefficients' scale.
constexpr double kProductFormFloor = 1e-3;

// Other root of a Y0^2 + b Y0 Y1 + c Y1^2 given the root [y0:y1].
ProjPoint conjugate_root(Complex a, Complex b, Complex c, const ProjPoint& y) {
  const double scale = std::max({std::abs(a), std::abs(b), std::abs(c)});
  if (scale == 0.0) throw Error(ErrorKind::IdenticallyZeroSlice, "the fibre quadratic vanishes identically");
  const Complex y0 = y.u0(), y1 = y.u1();
  const Complex p0 = c * y1, p1 = a * y0;
  if (std::max(std::abs(p0), std::abs(p1)) >= kProductFormFloor * scale) return ProjPoint(p0, p1);
  // Sum form, dehomogenized on the larger coordinate of y.
  const Complex s0 = std::abs(y1) >= std::abs(y0) ? -b * y1 - a * y0 : c * y0;
  const Complex s1 = std::abs(y1) >= std::abs(y0) ? a * y1 : -b * y0 - c * y1;
  if (std::max(std::abs(s0), std::abs(s1)) < 1e-14 * scale)
    throw Error(ErrorKind::IndeterminatePoint, "both Vieta forms are 0/0");
  return ProjPoint(s0, s1);
}

void require_on_curve(const KernelCurve& c, const CurvePoint& p, double tol) {
  const double r = c.residual(p);
  if (!(r <= tol))
    throw Error(ErrorKind::OffCurveInput, "point is off the curve (|Kbar| = " + std::to_string(r) + ")");
}

bool at_omega(const KernelCurve& c, const CurvePoint& p) {
  return c.genus() == 0 && distance(p, *c.report().omega) <= kOmegaSnap;
}

CurvePoint iota_unchecked(const KernelCurve& c, int k, const CurvePoint& p) {
  if (at_omega(c, p)) return *c.report().omega;
  const KernelDecomposition<double>& kd = c.kernel();
  if (k == 1) {
    const Complex x0 = p.x.u0(), x1 = p.x.u1();
    return {p.x, conjugate_root(kd.a1(x0, x1), kd.b1(x0, x1), kd.c1(x0, x1), p.y)};
  }
  const Complex y0 = p.y.u0(), y1 = p.y.u1();
  return {conjugate_root(kd.a2(y0, y1), kd.b2(y0, y1), kd.c2(y0, y1), p.x), p.y};
}

void check_index(int k) {
  if (k != 1 && k != 2) throw Error(ErrorKind::MalformedInput, "involution index must be 1 or 2");
}

}  // namespace

CurvePoint iota(const KernelCurve& c, int k, const CurvePoint& p, double on_curve_tol) {
  check_index(k);
  c.require_nondegenerate();
  require_on_curve(c, p, on_curve_tol);
  return iota_unchecked(c, k, p);
}

std::pair<CurvePoint, CurvePoint> points_over_x(const KernelCurve& c, const ProjPoint& x) {
  const KernelDecomposition<double>& kd = c.kernel();
  const auto [y1, y2] = quadratic_roots(kd.a1(x.u0(), x.u1()), kd.b1(x.u0(), x.u1()), kd.c1(x.u0(), x.u1()));
  return {CurvePoint{x, y1}, CurvePoint{x, y2}};
}

CurvePoint iota(const WalkModel& m, int k, const CurvePoint& p) { return iota(KernelCurve(m), k, p); }

CurvePoint sigma(const KernelCurve& c, const CurvePoint& p, Direction dir, double on_curve_tol) {
  c.require_nondegenerate();
  require_on_curve(c, p, on_curve_tol);
  const int first = dir == Direction::Forward ? 1 : 2;
  return iota_unchecked(c, 3 - first, iota_unchecked(c, first, p));
}

CurvePoint sigma(const WalkModel& m, const CurvePoint& p, Direction dir) { return sigma(KernelCurve(m), p, dir); }

std::vector<CurvePoint> fixed_points(const KernelCurve& c, int k) {
  check_index(k);
  const BranchData& br = c.branches();
  const KernelDecomposition<double>& kd = c.kernel();
  const auto& roots = k == 1 ? br.a : br.b;
  // Genus zero lists Omega's coordinate twice (a1 = a2).
  const std::size_t first = c.genus() == 0 ? 1 : 0;
  std::vector<CurvePoint> out;
  for (std::size_t i = first; i < 4; ++i) {
    const ProjPoint r = roots[i];
    if (k == 1) {
      out.push_back({r, double_root(kd.a1(r.u0(), r.u1()), kd.b1(r.u0(), r.u1()), kd.c1(r.u0(), r.u1()))});
    } else {
      out.push_back({double_root(kd.a2(r.u0(), r.u1()), kd.b2(r.u0(), r.u1()), kd.c2(r.u0(), r.u1())), r});
    }
  }
  return out;
}

std::vector<CurvePoint> fixed_points(const WalkModel& m, int k) { return fixed_points(KernelCurve(m), k); }

std::string to_string(OrderMethod m) {
  switch (m) {
    case OrderMethod::IterationClosure: return "IterationClosure";
    case OrderMethod::GenusZeroMultiplier: return "GenusZeroMultiplier";
    case OrderMethod::GenusOnePeriodRatio: return "GenusOnePeriodRatio";
  }
  return "?";
}

std::optional<std::pair<long long, long long>> rational_approximation(double x, long long max_den, double tol) {
  if (max_den < 1 || !std::isfinite(x)) return std::nullopt;
  const double sign = x < 0.0 ? -1.0 : 1.0;
  double lo = std::abs(x) - tol, hi = std::abs(x) + tol;
  if (lo <= 0.0) return std::make_pair(0LL, 1LL);
  // Simplest fraction in [lo, hi] by continued-fraction descent; the
  // recurrence builds the convergent matrix [[h1, h0], [k1, k0]].
  long long h1 = 1, h0 = 0, k1 = 0, k0 = 1;
  for (int depth = 0; depth < 64; ++depth) {
    const double fl = std::floor(lo);
    long long digit = static_cast<long long>(fl);
    const bool done = fl == lo || fl + 1.0 <= hi;
    if (done && fl != lo) digit += 1;
    const long long h = digit * h1 + h0, k = digit * k1 + k0;
    if (k > max_den) return std::nullopt;
    if (done) return std::make_pair(static_cast<long long>(sign) * h, k);
    h0 = h1;
    k0 = k1;
    h1 = h;
    k1 = k;
    const double nlo = 1.0 / (hi - fl), nhi = 1.0 / (lo - fl);
    lo = nlo;
    hi = nhi;
  }
  return std::nullopt;
}

OrbitReport sigma_order(const KernelCurve& c, const CurvePoint& start, int n_max, double tol) {
  c.require_nondegenerate();
  require_on_curve(c, start, kOnCurveTol);
  if (c.genus() == 0 && distance(start, *c.report().omega) <= kOmegaSnap)
    throw Error(ErrorKind::StartIsSingular, "the orbit of the double point Omega is trivial");

  OrbitReport r;
  r.search_limit = std::max(n_max, 0);
  if (n_max <= 0) return r;

  CurvePoint cur = start;
  for (int n = 1; n <= n_max; ++n) {
    cur = iota_unchecked(c, 2, iota_unchecked(c, 1, cur));
    r.orbit.push_back(cur);
    if (distance(cur, start) <= tol) {
      r.iteration_order = n;
      break;
    }
  }
  r.order = r.iteration_order;

  try {
    if (c.genus() == 0) {
      const double q = uniformize_genus0(c).q;
      r.analytic_value = q;
      if (std::abs(std::abs(q) - 1.0) > tol) {
        r.method = OrderMethod::GenusZeroMultiplier;
        r.order.reset();
      }
    } else {
      const GenusOneUniformization u = uniformize_genus1(c);
      const double ratio = u.omega3 / u.omega2;
      r.analytic_value = ratio;
      r.method = OrderMethod::GenusOnePeriodRatio;
      const auto frac = rational_approximation(ratio, n_max, tol);
      if (frac) r.order = static_cast<int>(frac->second);
      else r.order.reset();
    }
  } catch (const Error& e) {
    r.method = OrderMethod::IterationClosure;
    r.order = r.iteration_order;
    r.warnings.push_back(std::string("analytic order test unavailable: ") + e.what());
    return r;
  }
  if (r.order != r.iteration_order) {
    auto show = [](const std::optional<int>& o) { return o ? std::to_string(*o) : std::string("unbounded"); };
    r.warnings.push_back("iteration gives order " + show(r.iteration_order) + " but " + to_string(r.method) +
                         " gives " + show(r.order));
  }
  return r;
}

OrbitReport sigma_order(const WalkModel& m, const CurvePoint& start, int n_max, double tol) {
  return sigma_order(KernelCurve(m), start, n_max, tol);
}

}  // namespace kc
