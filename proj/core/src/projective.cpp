#include "kernelcurve/projective.hpp"

#include "kernelcurve/error.hpp"

#include <algorithm>
#include <cmath>

namespace kc {

ProjPoint::ProjPoint(Complex u0, Complex u1) {
  const double m0 = std::abs(u0), m1 = std::abs(u1);
  if (!(m0 > 0.0 || m1 > 0.0) || !std::isfinite(m0) || !std::isfinite(m1))
    throw Error(ErrorKind::IndeterminatePoint, "projective point with coordinates (0,0) or non-finite");
  if (m0 >= m1) {
    u1_ = u1 / u0;
    u0_ = 1.0;
  } else {
    u0_ = u0 / u1;
    u1_ = 1.0;
  }
}

std::optional<Complex> ProjPoint::affine_value() const {
  if (u1_ == Complex(0.0)) return std::nullopt;
  return u0_ / u1_;
}

bool ProjPoint::is_real(double tol) const {
  return std::abs(u0_.imag()) <= tol && std::abs(u1_.imag()) <= tol;
}

double chordal_distance(const ProjPoint& a, const ProjPoint& b) {
  const double na = std::hypot(std::abs(a.u0()), std::abs(a.u1()));
  const double nb = std::hypot(std::abs(b.u0()), std::abs(b.u1()));
  return std::abs(a.u0() * b.u1() - a.u1() * b.u0()) / (na * nb);
}

double distance(const CurvePoint& a, const CurvePoint& b) {
  return std::max(chordal_distance(a.x, b.x), chordal_distance(a.y, b.y));
}

}  // namespace kc
