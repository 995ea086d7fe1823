#pragma once

#include "kernelcurve/classify.hpp"

namespace kc {

/// Rational parametrization phi : P^1 -> curve of a genus-zero model, built
/// on the first-family reduction and mapped back through `family_transform`.
/// Pulled back, iota1 is s -> 1/s, iota2 is s -> q/s and sigma is s -> q s.
struct GenusZeroUniformization {
  double q = 0.0;       // |q| > 1
  Complex lambda;       // lambda * lambda == q
  QuarticForm<double> alpha;  // Delta_1 of the reduced model
  QuarticForm<double> beta;   // Delta_2 of the reduced model
  FamilyTransform family_transform;
  /// Signs applied to the principal roots of alpha3^2 - 4 alpha2 alpha4 and
  /// beta3^2 - 4 beta2 beta4, and the signed roots themselves.
  int alpha_sqrt_sign = 1;
  int beta_sqrt_sign = 1;
  Complex alpha_sqrt;
  Complex beta_sqrt;
  CurvePoint omega;
};

struct MultiplierPair {
  double q;          // the member with |q| > 1
  double q_inverse;
};

/// Closed-form multiplier and its inverse, evaluated on the first-family
/// reduction. Throws DegenerateModel, WrongGenus.
MultiplierPair q_candidates(const KernelCurve& c);
MultiplierPair q_candidates(const WalkModel& m);

/// Throws DegenerateModel, WrongGenus, InternalInconsistency (no lambda
/// puts phi on the curve).
GenusZeroUniformization uniformize_genus0(const KernelCurve& c);
GenusZeroUniformization uniformize_genus0(const WalkModel& m);

/// phi(0) = phi([1:0]) = Omega, phi(1) has x = a3, phi(-1) has x = a4 and
/// phi(lambda) has y = b3.
CurvePoint phi(const GenusZeroUniformization& u, const ProjPoint& s);
CurvePoint phi(const GenusZeroUniformization& u, Complex s);

}  // namespace kc
