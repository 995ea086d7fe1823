#include "kernelcurve/kernel.hpp"

namespace kc {

KernelDecomposition<Rational> decompose_exact(const WalkModel& m) {
  return decompose(m.weights(), m.t());
}

KernelDecomposition<double> decompose(const WalkModel& m) {
  return decompose(m.weights_d(), m.t_d());
}

QuarticForm<Rational> discriminant_exact(const WalkModel& m, Axis axis) {
  return discriminant(m.weights(), m.t(), axis);
}

QuarticForm<double> discriminant(const WalkModel& m, Axis axis) {
  // Exact coefficients rounded once, so structural zeros stay exactly zero.
  const QuarticForm<Rational> exact = discriminant_exact(m, axis);
  QuarticForm<double> f;
  for (std::size_t i = 0; i < 5; ++i) f.c[i] = to_double(exact.c[i]);
  return f;
}

Complex kernel_eval(const KernelDecomposition<double>& k, const CurvePoint& p) {
  const Complex x0 = p.x.u0(), x1 = p.x.u1();
  const Complex y0 = p.y.u0(), y1 = p.y.u1();
  return k.c1(x0, x1) * y1 * y1 + k.b1(x0, x1) * y0 * y1 + k.a1(x0, x1) * y0 * y0;
}

Complex kernel_eval(const WalkModel& m, const CurvePoint& p) {
  return kernel_eval(decompose(m), p);
}

}  // namespace kc
