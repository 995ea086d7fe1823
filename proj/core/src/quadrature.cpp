#include "kernelcurve/quadrature.hpp"

#include "kernelcurve/error.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numbers>

namespace kc {

namespace {

GaussLegendreRule make_rule(int n) {
  GaussLegendreRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged node.
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    rule.nodes[static_cast<std::size_t>(i)] = x;
    rule.weights[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

double adaptive_step(const std::function<double(double)>& f, double a, double b, double whole,
                     double abs_tol, int depth) {
  const double mid = 0.5 * (a + b);
  const double left = integrate_fixed(f, a, mid);
  const double right = integrate_fixed(f, mid, b);
  if (depth <= 0 || std::abs(left + right - whole) <= abs_tol) return left + right;
  return adaptive_step(f, a, mid, left, 0.5 * abs_tol, depth - 1) +
         adaptive_step(f, mid, b, right, 0.5 * abs_tol, depth - 1);
}

int effective_degree(const QuarticForm<double>& d) {
  double scale = 0.0;
  for (double c : d.c) scale = std::max(scale, std::abs(c));
  int deg = 4;
  while (deg > 0 && std::abs(d.c[static_cast<std::size_t>(deg)]) <= 1e-14 * scale) --deg;
  return deg;
}

// Quotient of D by the monic (x - r), dropping the remainder.
std::vector<double> deflate(const std::vector<double>& ascending, double r) {
  const std::size_t n = ascending.size() - 1;
  std::vector<double> q(n);
  double carry = ascending[n];
  for (std::size_t k = n; k-- > 0;) {
    q[k] = carry;
    carry = ascending[k] + carry * r;
  }
  return q;
}

double eval_poly(const std::vector<double>& ascending, double x) {
  double acc = 0.0;
  for (std::size_t k = ascending.size(); k-- > 0;) acc = acc * x + ascending[k];
  return acc;
}

std::vector<double> trimmed(const QuarticForm<double>& d) {
  const int deg = effective_degree(d);
  return std::vector<double>(d.c.begin(), d.c.begin() + deg + 1);
}

void require_root(const QuarticForm<double>& d, double r, const char* which) {
  double scale = 0.0;
  for (double c : d.c) scale = std::max(scale, std::abs(c));
  const double mag = std::max(1.0, std::abs(r));
  if (std::abs(d.at(r)) > 1e-8 * scale * mag * mag * mag * mag)
    throw Error(ErrorKind::NonRootEndpoints,
                std::string(which) + " endpoint " + std::to_string(r) + " is not a root of D");
}

}  // namespace

const GaussLegendreRule& gauss_legendre(int n) {
  static std::mutex mu;
  static std::map<int, GaussLegendreRule> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, make_rule(n)).first;
  return it->second;
}

double integrate_fixed(const std::function<double(double)>& f, double a, double b, int n) {
  const GaussLegendreRule& rule = gauss_legendre(n);
  const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return half * sum;
}

double integrate_adaptive(const std::function<double(double)>& f, double a, double b, double abs_tol,
                          int max_depth) {
  return adaptive_step(f, a, b, integrate_fixed(f, a, b), abs_tol, max_depth);
}

double period_integral(const QuarticForm<double>& d, double lo, double hi, IntegrandKind kind,
                       double abs_tol) {
  if (!(lo < hi)) throw Error(ErrorKind::NonRootEndpoints, "period interval needs lo < hi");
  require_root(d, lo, "lower");
  require_root(d, hi, "upper");
  const std::vector<double> g = deflate(deflate(trimmed(d), lo), hi);

  // D = g (x - lo)(x - hi) and (x - lo)(x - hi) < 0 inside, so D > 0 iff g < 0.
  const double wanted = kind == IntegrandKind::Sqrt ? -1.0 : 1.0;
  for (int k = 1; k < 64; ++k) {
    const double s = std::sin(0.5 * std::numbers::pi * k / 64.0);
    const double v = eval_poly(g, lo + (hi - lo) * s * s);
    if (!(v * wanted > 0.0))
      throw Error(ErrorKind::SignMismatch, "D changes sign or has the wrong sign on (" + std::to_string(lo) +
                                               ", " + std::to_string(hi) + ")");
  }
  auto integrand = [&](double theta) {
    const double s = std::sin(theta);
    return 2.0 / std::sqrt(std::abs(eval_poly(g, lo + (hi - lo) * s * s)));
  };
  return integrate_adaptive(integrand, 0.0, 0.5 * std::numbers::pi, abs_tol);
}

double root_to_point_integral(const QuarticForm<double>& d, double root, double end, double abs_tol) {
  require_root(d, root, "root");
  const std::vector<double> h = deflate(trimmed(d), root);
  const double span = end - root;
  double sign = 0.0;
  for (int k = 1; k <= 64; ++k) {
    const double s = std::sin(0.5 * std::numbers::pi * k / 64.0);
    const double v = eval_poly(h, root + span * s * s) * span;
    const double sv = v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0);
    if (sv == 0.0 || (sign != 0.0 && sv != sign))
      throw Error(ErrorKind::SignMismatch, "D changes sign between the root and the end point");
    sign = sv;
  }
  const double scale = std::sqrt(std::abs(span));
  auto integrand = [&](double theta) {
    const double s = std::sin(theta);
    return 2.0 * scale * std::cos(theta) / std::sqrt(std::abs(eval_poly(h, root + span * s * s)));
  };
  return integrate_adaptive(integrand, 0.0, 0.5 * std::numbers::pi, abs_tol);
}

QuarticForm<double> mobius_chart(const QuarticForm<double>& d, double p) {
  // Taylor shift: D(p + v) = sum e_k v^k, then u^4 D(p + 1/u) = sum e_k u^(4-k).
  std::array<double, 5> e = d.c;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t k = 4; k > i; --k) e[k - 1] += p * e[k];
  QuarticForm<double> out;
  for (std::size_t k = 0; k < 5; ++k) out.c[4 - k] = e[k];
  return out;
}

}  // namespace kc
