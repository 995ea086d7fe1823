#pragma once

#include "kernelcurve/kernel.hpp"
#include "kernelcurve/projective.hpp"

#include <span>
#include <vector>

namespace kc {

struct ProjectiveRoot {
  ProjPoint root;
  int multiplicity = 1;
};

/// Relative size below which a coefficient is treated as structurally zero.
inline constexpr double kCoefficientZeroTol = 1e-14;
inline constexpr double kDefaultMergeTol = 1e-7;

/// Roots of sum_i c[i] x^i (ascending, leading coefficient nonzero) from the
/// eigenvalues of the companion matrix, each polished by two Newton steps.
std::vector<Complex> polynomial_roots(std::span<const Complex> ascending);

/// Projective zero set of sum_i c[i] u0^i u1^(4-i). Vanishing top
/// coefficients give [1:0] with the matching multiplicity; vanishing bottom
/// ones give [0:1]. Roots closer than `tol` (relative) are merged and their
/// multiplicities summed. Multiplicities always total 4.
/// Throws ZeroForm when every coefficient is zero.
std::vector<ProjectiveRoot> quartic_roots(const QuarticForm<Complex>& f, double tol = kDefaultMergeTol);
std::vector<ProjectiveRoot> quartic_roots(const QuarticForm<double>& f, double tol = kDefaultMergeTol);

/// The two roots of a u0^2 + b u0 u1 + c u1^2, computed without
/// cancellation. When the discriminant is below `tol` relative to the
/// coefficients both entries hold the double root.
/// Throws IdenticallyZeroSlice when a = b = c = 0.
std::pair<ProjPoint, ProjPoint> quadratic_roots(Complex a, Complex b, Complex c, double tol = 1e-12);

/// The double root of a u0^2 + b u0 u1 + c u1^2 assuming b^2 = 4ac, as
/// whichever of [-b : 2a] and [2c : -b] is better scaled.
ProjPoint double_root(Complex a, Complex b, Complex c);

/// True when some root has multiplicity >= 2.
bool has_multiple_root(const std::vector<ProjectiveRoot>& roots);

}  // namespace kc
