#pragma once

#include "kernelcurve/classify.hpp"
#include "kernelcurve/weierstrass.hpp"

#include <array>
#include <utility>

namespace kc {

/// Elliptic parametrization Lambda : C / (Z omega1 + Z omega2) -> curve of a
/// genus-one model. Pulled back, iota1 is w -> -w, iota2 is w -> omega3 - w
/// and sigma is w -> w + omega3.
struct GenusOneUniformization {
  Complex omega1;        // purely imaginary, Im > 0
  double omega2 = 0.0;   // > 0
  double omega3 = 0.0;   // in (0, omega2)
  Lattice lattice;
  QuarticForm<double> d;  // Delta_1 dehomogenized, ascending in x
  /// a1..a4 in index 0..3.
  std::array<ProjPoint, 4> branch;
  bool a4_at_infinity = false;
  /// The y-branch point b whose fibre fixed the omega3 integral, and the
  /// x-coordinate of that fixed point of iota2.
  ProjPoint omega3_y;
  ProjPoint omega3_x;
  /// Sign of Im(omega2 / omega1); -1 with the conventions above.
  int period_ratio_sign = -1;
  KernelDecomposition<double> kernel;
};

/// Throws DegenerateModel, WrongGenus, NonRealBranchPoints, Omega3OutOfRange.
GenusOneUniformization uniformize_genus1(const KernelCurve& c);
GenusOneUniformization uniformize_genus1(const WalkModel& m);

/// Roots in x of Abar2(y) x0^2 + Bbar2(y) x0 x1 + Cbar2(y) x1^2, equal when
/// Delta_2(y) = 0. Throws IdenticallyZeroSlice.
std::pair<ProjPoint, ProjPoint> x_partners(const KernelCurve& c, const ProjPoint& y);
std::pair<ProjPoint, ProjPoint> x_partners(const WalkModel& m, const ProjPoint& y);

/// Lambda(w). At lattice points returns the fixed point of iota1 over a4.
CurvePoint lambda_map(const GenusOneUniformization& u, Complex w);

}  // namespace kc
