#pragma once

#include "kernelcurve/projective.hpp"

namespace kc {

struct WeierstrassValue {
  Complex p;   // wp(w)
  Complex dp;  // wp'(w)
};

/// A period lattice Z omega1 + Z omega2 with Im(omega2 / omega1) != 0.
/// Internally a Gauss-reduced basis (p, tau p), Im tau > 0, drives the
/// nome expansions.
class Lattice {
 public:
  /// Throws InternalInconsistency when the periods are collinear.
  Lattice(Complex omega1, Complex omega2);

  Complex omega1() const { return omega1_; }
  Complex omega2() const { return omega2_; }
  Complex reduced_period() const { return p_; }
  Complex tau() const { return tau_; }

  Complex g2() const { return g2_; }
  Complex g3() const { return g3_; }

  /// Representative of w in the period parallelogram centred at 0.
  Complex reduce(Complex w) const;
  bool is_lattice_point(Complex w, double tol = 1e-12) const;

 private:
  Complex omega1_, omega2_;
  Complex p_, tau_;
  Complex nome_;  // exp(i pi tau)
  Complex g2_, g3_;

  friend WeierstrassValue weierstrass(const Lattice& l, Complex w);
};

/// wp and wp' by the q-expansion. Throws Pole at lattice points.
WeierstrassValue weierstrass(const Lattice& l, Complex w);

}  // namespace kc
