#include "kernelcurve/weierstrass.hpp"

#include "kernelcurve/error.hpp"

#include <cmath>
#include <numbers>

namespace kc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxTerms = 200;
constexpr double kSeriesEps = 1e-18;

double sigma_power(int n, int k) {
  double s = 0.0;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) s += std::pow(static_cast<double>(d), k);
  return s;
}

}  // namespace

Lattice::Lattice(Complex omega1, Complex omega2) : omega1_(omega1), omega2_(omega2) {
  const double area = std::imag(std::conj(omega1) * omega2);
  if (!(std::abs(area) > 1e-14 * std::abs(omega1) * std::abs(omega2)))
    throw Error(ErrorKind::InternalInconsistency, "lattice periods are collinear");

  // Lagrange-Gauss reduction.
  Complex a = omega1, b = omega2;
  if (std::abs(a) > std::abs(b)) std::swap(a, b);
  for (int it = 0; it < 100; ++it) {
    const double mu = std::round(std::real(b / a));
    b -= mu * a;
    if (std::abs(b) >= std::abs(a)) break;
    std::swap(a, b);
  }
  p_ = a;
  tau_ = b / a;
  if (tau_.imag() < 0.0) tau_ = -tau_;
  nome_ = std::exp(Complex(0.0, kPi) * tau_);

  const Complex q2 = nome_ * nome_;
  Complex e4 = 1.0, e6 = 1.0, qn = 1.0;
  for (int n = 1; n <= kMaxTerms; ++n) {
    qn *= q2;
    e4 += 240.0 * sigma_power(n, 3) * qn;
    e6 -= 504.0 * sigma_power(n, 5) * qn;
    if (std::abs(qn) * std::pow(static_cast<double>(n), 6) < kSeriesEps) break;
  }
  const Complex s = kPi / p_;
  const Complex s2 = s * s;
  g2_ = s2 * s2 * (4.0 / 3.0) * e4;
  g3_ = s2 * s2 * s2 * (8.0 / 27.0) * e6;
}

Complex Lattice::reduce(Complex w) const {
  // Coordinates of w in the basis (p, tau p).
  const Complex b = tau_ * p_;
  const double det = std::imag(std::conj(p_) * b);
  const double ca = std::imag(std::conj(w) * b) / det;
  const double cb = std::imag(std::conj(p_) * w) / det;
  return w - std::round(ca) * p_ - std::round(cb) * b;
}

bool Lattice::is_lattice_point(Complex w, double tol) const {
  return std::abs(reduce(w)) <= tol * std::abs(p_);
}

WeierstrassValue weierstrass(const Lattice& l, Complex w) {
  const Complex z = l.reduce(w);
  if (std::abs(z) <= 1e-15 * std::abs(l.p_)) throw Error(ErrorKind::Pole, "wp has a pole at a lattice point");

  const Complex s = kPi / l.p_;
  const Complex v = s * z;
  const Complex sv = std::sin(v), cv = std::cos(v);
  const Complex csc2 = 1.0 / (sv * sv);

  const Complex q2 = l.nome_ * l.nome_;
  Complex qn = 1.0, lambert = 0.0, series = 0.0, dseries = 0.0;
  for (int n = 1; n <= kMaxTerms; ++n) {
    qn *= q2;
    const Complex term = qn / (1.0 - qn);
    const Complex c = term * static_cast<double>(n);
    lambert += c;
    const Complex a = 2.0 * static_cast<double>(n) * v;
    const Complex cs = c * std::cos(a), sn = c * std::sin(a);
    series += cs;
    dseries += sn * static_cast<double>(n);
    const double bound = std::abs(term) * n * n * std::exp(2.0 * n * std::abs(v.imag()));
    if (bound < kSeriesEps) break;
  }
  const Complex s2 = s * s;
  WeierstrassValue out;
  out.p = s2 * (-(1.0 - 24.0 * lambert) / 3.0 + csc2 - 8.0 * series);
  out.dp = s2 * s * (-2.0 * csc2 * cv / sv + 16.0 * dseries);
  return out;
}

}  // namespace kc
