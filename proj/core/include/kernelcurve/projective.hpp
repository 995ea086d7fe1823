#pragma once

#include <complex>
#include <optional>
#include <string>

namespace kc {

using Complex = std::complex<double>;

/// A point [u0:u1] of the complex projective line. Always stored normalized:
/// the coordinate of larger magnitude is exactly 1 (ties go to u0), so
/// [1:0] is infinity and [x:1] is the affine point x.
class ProjPoint {
 public:
  ProjPoint() : u0_(0.0), u1_(1.0) {}
  ProjPoint(Complex u0, Complex u1);

  static ProjPoint affine(Complex x) { return ProjPoint(x, 1.0); }
  static ProjPoint infinity() { return ProjPoint(1.0, 0.0); }

  Complex u0() const { return u0_; }
  Complex u1() const { return u1_; }

  bool is_infinite(double tol = 0.0) const { return std::abs(u1_) <= tol; }
  /// Affine value u0/u1; nullopt at infinity.
  std::optional<Complex> affine_value() const;
  /// Both normalized coordinates real within tol, i.e. a point of RP^1.
  bool is_real(double tol) const;

  /// Swaps the coordinates, i.e. x -> 1/x.
  ProjPoint inverted() const { return ProjPoint(u1_, u0_); }

 private:
  Complex u0_, u1_;
};

/// Chordal distance on P^1: |a0 b1 - a1 b0| / (|a| |b|), in [0, 1].
double chordal_distance(const ProjPoint& a, const ProjPoint& b);

/// A point of P^1 x P^1.
struct CurvePoint {
  ProjPoint x;
  ProjPoint y;
};

/// Max of the two chordal factors.
double distance(const CurvePoint& a, const CurvePoint& b);

inline bool approx_equal(const CurvePoint& a, const CurvePoint& b, double tol) {
  return distance(a, b) <= tol;
}

}  // namespace kc
