#include "kernelcurve/uniform_g0.hpp"

#include "kernelcurve/error.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <tuple>

namespace kc {

namespace {

void require_genus_zero(const KernelCurve& c) {
  if (c.genus() != 0) throw Error(ErrorKind::WrongGenus, "model has genus 1, expected genus 0");
}

QuarticForm<double> rounded(const QuarticForm<Rational>& f) {
  QuarticForm<double> out;
  for (std::size_t i = 0; i < 5; ++i) out.c[i] = to_double(f.c[i]);
  return out;
}

// Signed root of c3^2 - 4 c2 c4 chosen so that the parametrization sends
// s = 1 to the tabulated a3. With c4 != 0 the principal root already does;
// with c4 = 0 the tabulated a3 is [1:0], which needs root = c3.
std::pair<Complex, int> branch_root(const QuarticForm<double>& f) {
  const Complex principal = std::sqrt(Complex(f.c[3] * f.c[3] - 4.0 * f.c[2] * f.c[4]));
  if (f.c[4] != 0.0) return {principal, 1};
  const int sign = std::abs(principal - f.c[3]) <= std::abs(principal + f.c[3]) ? 1 : -1;
  return {static_cast<double>(sign) * principal, sign};
}

// The first-family parametrization, before the family transform.
CurvePoint reduced_phi(const GenusZeroUniformization& u, Complex s0, Complex s1) {
  const Complex l = u.lambda;
  const Complex x0 = 4.0 * u.alpha.c[2] * s0 * s1;
  const Complex x1 = u.alpha_sqrt * (s0 * s0 + s1 * s1) - 2.0 * u.alpha.c[3] * s0 * s1;
  const Complex y0 = 4.0 * u.beta.c[2] * l * s0 * s1;
  const Complex y1 = u.beta_sqrt * (s0 * s0 + l * l * s1 * s1) - 2.0 * u.beta.c[3] * l * s0 * s1;
  return {ProjPoint(x0, x1), ProjPoint(y0, y1)};
}

}  // namespace

MultiplierPair q_candidates(const KernelCurve& c) {
  require_genus_zero(c);
  const FamilyTransform& f = *c.report().family;
  const WalkModel reduced = c.model().reflected(f.si, f.sj);
  const double t = reduced.t_d();
  const double d00 = reduced.weight_d(0, 0);
  const double u = -1.0 + d00 * t;
  const double r = std::sqrt(u * u - 4.0 * reduced.weight_d(1, -1) * reduced.weight_d(-1, 1) * t * t);
  // Both u - r and u + r are negative; the first has the larger magnitude.
  return {(u - r) / (u + r), (u + r) / (u - r)};
}

MultiplierPair q_candidates(const WalkModel& m) { return q_candidates(KernelCurve(m)); }

GenusZeroUniformization uniformize_genus0(const KernelCurve& c) {
  const MultiplierPair qs = q_candidates(c);
  const FamilyTransform& f = *c.report().family;
  const WalkModel reduced = c.model().reflected(f.si, f.sj);
  const KernelDecomposition<double> reduced_kernel = decompose(reduced);

  GenusZeroUniformization u;
  u.family_transform = f;
  u.omega = *c.report().omega;
  u.alpha = rounded(discriminant_exact(reduced, Axis::X));
  u.beta = rounded(discriminant_exact(reduced, Axis::Y));
  std::tie(u.alpha_sqrt, u.alpha_sqrt_sign) = branch_root(u.alpha);
  std::tie(u.beta_sqrt, u.beta_sqrt_sign) = branch_root(u.beta);

  // lambda^2 = q up to sign; pick the sign that keeps phi on the curve.
  const double root = std::sqrt(qs.q);
  static constexpr std::array<Complex, 4> probes{Complex(0.7, 0.2), Complex(-1.3, 0.5), Complex(2.1, -0.9),
                                                 Complex(0.35, 1.7)};
  double best = std::numeric_limits<double>::infinity();
  double chosen = root;
  for (double candidate : {root, -root}) {
    u.lambda = candidate;
    double worst = 0.0;
    for (Complex s : probes)
      worst = std::max(worst, std::abs(kernel_eval(reduced_kernel, reduced_phi(u, s, 1.0))));
    if (worst < best) {
      best = worst;
      chosen = candidate;
    }
  }
  if (!(best <= 1e-8))
    throw Error(ErrorKind::InternalInconsistency,
                "no square root of q puts the parametrization on the curve (residual " + std::to_string(best) + ")");
  u.lambda = chosen;
  u.q = chosen * chosen;
  return u;
}

GenusZeroUniformization uniformize_genus0(const WalkModel& m) { return uniformize_genus0(KernelCurve(m)); }

CurvePoint phi(const GenusZeroUniformization& u, const ProjPoint& s) {
  return u.family_transform.apply(reduced_phi(u, s.u0(), s.u1()));
}

CurvePoint phi(const GenusZeroUniformization& u, Complex s) { return phi(u, ProjPoint::affine(s)); }

}  // namespace kc
