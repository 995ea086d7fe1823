#include "kernelcurve/quartic.hpp"

#include "kernelcurve/error.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace kc {

namespace {

Complex horner(std::span<const Complex> c, Complex x) {
  Complex acc = 0.0;
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
  return acc;
}

Complex horner_derivative(std::span<const Complex> c, Complex x) {
  Complex acc = 0.0;
  for (std::size_t k = c.size(); k-- > 1;) acc = acc * x + static_cast<double>(k) * c[k];
  return acc;
}

}  // namespace

std::vector<Complex> polynomial_roots(std::span<const Complex> ascending) {
  const std::size_t n = ascending.size() - 1;
  if (ascending.empty() || n == 0) return {};
  const Complex lead = ascending[n];
  if (n == 1) return {-ascending[0] / lead};

  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n),
                                                      static_cast<Eigen::Index>(n));
  for (std::size_t i = 1; i < n; ++i)
    companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
  for (std::size_t i = 0; i < n; ++i)
    companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(n - 1)) = -ascending[i] / lead;

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  std::vector<Complex> roots;
  roots.reserve(n);
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) roots.push_back(solver.eigenvalues()(i));

  for (Complex& r : roots) {
    for (int step = 0; step < 2; ++step) {
      const Complex p = horner(ascending, r);
      const Complex dp = horner_derivative(ascending, r);
      if (dp == Complex(0.0)) break;
      const Complex candidate = r - p / dp;
      if (std::abs(horner(ascending, candidate)) < std::abs(p)) r = candidate;
    }
  }
  return roots;
}

std::vector<ProjectiveRoot> quartic_roots(const QuarticForm<Complex>& f, double tol) {
  double scale = 0.0;
  for (const Complex& c : f.c) scale = std::max(scale, std::abs(c));
  if (scale == 0.0) throw Error(ErrorKind::ZeroForm, "quartic form is identically zero");
  auto is_zero = [&](const Complex& c) { return std::abs(c) <= kCoefficientZeroTol * scale; };

  std::size_t top = 4;
  while (is_zero(f.c[top])) --top;
  std::size_t bottom = 0;
  while (is_zero(f.c[bottom])) ++bottom;

  std::vector<ProjectiveRoot> out;
  std::vector<Complex> finite(f.c.begin() + static_cast<std::ptrdiff_t>(bottom),
                              f.c.begin() + static_cast<std::ptrdiff_t>(top) + 1);
  std::vector<Complex> roots = polynomial_roots(finite);
  std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });

  // Greedy clustering; roots are few.
  std::vector<std::pair<Complex, int>> clusters;
  if (bottom > 0) clusters.emplace_back(Complex(0.0), static_cast<int>(bottom));
  for (Complex r : roots) {
    bool merged = false;
    for (auto& [centre, count] : clusters) {
      const double ref = std::max({1.0, std::abs(centre), std::abs(r)});
      if (std::abs(centre - r) <= tol * ref) {
        centre = (centre * static_cast<double>(count) + r) / static_cast<double>(count + 1);
        ++count;
        merged = true;
        break;
      }
    }
    if (!merged) clusters.emplace_back(r, 1);
  }
  std::sort(clusters.begin(), clusters.end(), [](const auto& a, const auto& b) {
    return a.first.real() != b.first.real() ? a.first.real() < b.first.real()
                                            : a.first.imag() < b.first.imag();
  });
  for (const auto& [centre, count] : clusters) out.push_back({ProjPoint::affine(centre), count});
  if (top < 4) out.push_back({ProjPoint::infinity(), static_cast<int>(4 - top)});
  return out;
}

std::vector<ProjectiveRoot> quartic_roots(const QuarticForm<double>& f, double tol) {
  QuarticForm<Complex> g;
  for (std::size_t i = 0; i < 5; ++i) g.c[i] = f.c[i];
  return quartic_roots(g, tol);
}

bool has_multiple_root(const std::vector<ProjectiveRoot>& roots) {
  return std::any_of(roots.begin(), roots.end(), [](const ProjectiveRoot& r) { return r.multiplicity >= 2; });
}

}  // namespace kc

namespace kc {

std::pair<ProjPoint, ProjPoint> quadratic_roots(Complex a, Complex b, Complex c, double tol) {
  const double scale = std::max({std::abs(a), std::abs(b), std::abs(c)});
  if (scale == 0.0) throw Error(ErrorKind::IdenticallyZeroSlice, "the quadratic vanishes identically");
  a /= scale;
  b /= scale;
  c /= scale;
  const Complex disc = b * b - 4.0 * a * c;
  if (std::abs(disc) <= tol) {
    const ProjPoint r = double_root(a, b, c);
    return {r, r};
  }
  const Complex sq = std::sqrt(disc);
  const Complex m = std::abs(b + sq) >= std::abs(b - sq) ? -(b + sq) / 2.0 : -(b - sq) / 2.0;
  // Roots are m/a and c/m; m != 0 because the discriminant is not small.
  return {ProjPoint(m, a), ProjPoint(c, m)};
}

ProjPoint double_root(Complex a, Complex b, Complex c) {
  const double n1 = std::max(std::abs(b), 2.0 * std::abs(a));
  const double n2 = std::max(std::abs(b), 2.0 * std::abs(c));
  if (n1 == 0.0 && n2 == 0.0) throw Error(ErrorKind::IdenticallyZeroSlice, "the quadratic vanishes identically");
  return n1 >= n2 ? ProjPoint(-b, 2.0 * a) : ProjPoint(2.0 * c, -b);
}

}  // namespace kc
