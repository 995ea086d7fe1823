#pragma once

#include "kernelcurve/model.hpp"
#include "kernelcurve/projective.hpp"

#include <array>
#include <cstddef>

namespace kc {

/// Binary form sum_i c[i] u0^i u1^(N-i) on P^1. Dehomogenizing at u1 = 1
/// gives the polynomial sum_i c[i] x^i, so c is also the ascending
/// coefficient list of the affine polynomial.
template <class T, std::size_t N>
struct BinaryForm {
  std::array<T, N + 1> c{};

  static constexpr std::size_t degree = N;

  template <class U>
  U operator()(const U& u0, const U& u1) const {
    // Horner in u0 with u1 powers folded in from the top.
    U acc = U(c[N]);
    U u1pow = U(1);
    for (std::size_t k = N; k-- > 0;) {
      u1pow = u1pow * u1;
      acc = acc * u0 + U(c[k]) * u1pow;
    }
    return acc;
  }

  template <class U>
  U at(const U& x) const {
    U acc = U(c[N]);
    for (std::size_t k = N; k-- > 0;) acc = acc * x + U(c[k]);
    return acc;
  }

  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;
};

template <class T>
using BinaryQuadratic = BinaryForm<T, 2>;
template <class T>
using QuarticForm = BinaryForm<T, 4>;

template <class T, std::size_t N, std::size_t M>
BinaryForm<T, N + M> operator*(const BinaryForm<T, N>& a, const BinaryForm<T, M>& b) {
  BinaryForm<T, N + M> out;
  for (auto& v : out.c) v = T(0);
  for (std::size_t i = 0; i <= N; ++i)
    for (std::size_t j = 0; j <= M; ++j) out.c[i + j] += a.c[i] * b.c[j];
  return out;
}

template <class T, std::size_t N>
BinaryForm<T, N> operator-(const BinaryForm<T, N>& a, const BinaryForm<T, N>& b) {
  BinaryForm<T, N> out;
  for (std::size_t i = 0; i <= N; ++i) out.c[i] = a.c[i] - b.c[i];
  return out;
}

template <class T, std::size_t N>
BinaryForm<T, N> operator*(const T& s, const BinaryForm<T, N>& a) {
  BinaryForm<T, N> out;
  for (std::size_t i = 0; i <= N; ++i) out.c[i] = s * a.c[i];
  return out;
}

/// The pieces of the bihomogeneous kernel
///   Kbar = x0 x1 y0 y1 - t sum d_{i,j} x0^{i+1} x1^{1-i} y0^{j+1} y1^{1-j}
/// grouped by powers of y (Kbar = C1 y1^2 + B1 y0 y1 + A1 y0^2) and by
/// powers of x (Kbar = C2 x1^2 + B2 x0 x1 + A2 x0^2).
template <class T>
struct KernelDecomposition {
  /// tilde_a[j+1] = t x A_j(x) = t sum_i d_{i,j} x^{i+1}, ascending in x.
  std::array<std::array<T, 3>, 3> tilde_a{};
  /// tilde_b[i+1] = t y B_i(y) = t sum_j d_{i,j} y^{j+1}, ascending in y.
  std::array<std::array<T, 3>, 3> tilde_b{};

  BinaryQuadratic<T> a1, b1, c1;  // forms in (x0, x1)
  BinaryQuadratic<T> a2, b2, c2;  // forms in (y0, y1)

  /// A(x) = t(d_{-1,1} + d_{0,1} x + d_{1,1} x^2), ascending.
  std::array<T, 3> a_poly{};
  /// B(x) = t(d_{-1,0} - x/t + d_{0,0} x + d_{1,0} x^2), ascending.
  std::array<T, 3> b_poly{};
};

template <class T>
KernelDecomposition<T> decompose(const WeightGrid<T>& d, const T& t) {
  KernelDecomposition<T> k;
  for (int a = -1; a <= 1; ++a) {
    const auto ia = static_cast<std::size_t>(a + 1);
    for (int b = -1; b <= 1; ++b) {
      const auto ib = static_cast<std::size_t>(b + 1);
      k.tilde_a[ib][ia] = t * d(a, b);
      k.tilde_b[ia][ib] = t * d(a, b);
    }
    k.a1.c[ia] = -(t * d(a, 1));
    k.b1.c[ia] = -(t * d(a, 0));
    k.c1.c[ia] = -(t * d(a, -1));
    k.a2.c[ia] = -(t * d(1, a));
    k.b2.c[ia] = -(t * d(0, a));
    k.c2.c[ia] = -(t * d(-1, a));
  }
  k.b1.c[1] += T(1);
  k.b2.c[1] += T(1);
  k.a_poly = {t * d(-1, 1), t * d(0, 1), t * d(1, 1)};
  k.b_poly = {t * d(-1, 0), t * d(0, 0) - T(1), t * d(1, 0)};
  return k;
}

KernelDecomposition<Rational> decompose_exact(const WalkModel& m);
KernelDecomposition<double> decompose(const WalkModel& m);

enum class Axis { X, Y };

/// Delta_1 (axis X) or Delta_2 (axis Y) from the closed-form coefficient
/// lists alpha_0..alpha_4 / beta_0..beta_4.
template <class T>
QuarticForm<T> discriminant(const WeightGrid<T>& d, const T& t, Axis axis) {
  // beta is alpha with the roles of i and j exchanged.
  auto w = [&](int i, int j) -> const T& { return axis == Axis::X ? d(i, j) : d(j, i); };
  const T t2 = t * t;
  QuarticForm<T> f;
  f.c[0] = t2 * w(-1, 0) * w(-1, 0) - T(4) * t2 * w(-1, 1) * w(-1, -1);
  f.c[1] = T(2) * t2 * w(-1, 0) * w(0, 0) - T(2) * t * w(-1, 0) - T(4) * t2 * w(-1, 1) * w(0, -1) -
           T(4) * t2 * w(0, 1) * w(-1, -1);
  f.c[2] = t2 * w(0, 0) * w(0, 0) - T(2) * t * w(0, 0) + T(1) + T(2) * t2 * w(-1, 0) * w(1, 0) -
           T(4) * t2 * w(-1, 1) * w(1, -1) - T(4) * t2 * w(0, 1) * w(0, -1) -
           T(4) * t2 * w(1, 1) * w(-1, -1);
  f.c[3] = -(T(2) * t * w(1, 0)) + T(2) * t2 * w(0, 0) * w(1, 0) - T(4) * t2 * w(1, 1) * w(0, -1) -
           T(4) * t2 * w(0, 1) * w(1, -1);
  f.c[4] = t2 * w(1, 0) * w(1, 0) - T(4) * t2 * w(1, 1) * w(1, -1);
  return f;
}

QuarticForm<Rational> discriminant_exact(const WalkModel& m, Axis axis);
QuarticForm<double> discriminant(const WalkModel& m, Axis axis);

/// Kbar at the normalized representative of p. On affine points
/// ([x:1],[y:1]) this is K(x, y, t) = xy(1 - t S(x, y)).
Complex kernel_eval(const KernelDecomposition<double>& k, const CurvePoint& p);
Complex kernel_eval(const WalkModel& m, const CurvePoint& p);

}  // namespace kc
