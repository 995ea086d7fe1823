#include "kernelcurve/series.hpp"

#include "kernelcurve/error.hpp"

#include <algorithm>

namespace kc {

namespace {

const Rational& zero() {
  static const Rational z(0);
  return z;
}

}  // namespace

TruncatedSeries::TruncatedSeries(int order) : order_(order) {
  layers_.resize(static_cast<std::size_t>(order + 1));
  for (int k = 0; k <= order; ++k) layers_[static_cast<std::size_t>(k)].resize(static_cast<std::size_t>((k + 1) * (k + 1)));
}

const Rational& TruncatedSeries::coeff(int i, int j, int k) const {
  if (k < 0 || k > order_ || i < 0 || j < 0 || i > k || j > k) return zero();
  return layers_[static_cast<std::size_t>(k)][static_cast<std::size_t>(i * (k + 1) + j)];
}

Rational& TruncatedSeries::at(int i, int j, int k) {
  if (k < 0 || k > order_ || i < 0 || j < 0 || i > k || j > k)
    throw Error(ErrorKind::InternalInconsistency, "series index outside the reachable range");
  return layers_[static_cast<std::size_t>(k)][static_cast<std::size_t>(i * (k + 1) + j)];
}

std::map<SeriesIndex, Rational> TruncatedSeries::terms() const {
  std::map<SeriesIndex, Rational> out;
  for (int k = 0; k <= order_; ++k)
    for (int i = 0; i <= k; ++i)
      for (int j = 0; j <= k; ++j)
        if (const Rational& v = coeff(i, j, k); v != 0) out.emplace(SeriesIndex{i, j, k}, v);
  return out;
}

TruncatedSeries TruncatedSeries::truncated(int m) const {
  TruncatedSeries out(std::min(m, order_));
  for (int k = 0; k <= out.order_; ++k) out.layers_[static_cast<std::size_t>(k)] = layers_[static_cast<std::size_t>(k)];
  return out;
}

TruncatedSeries walk_series(const WalkModel& m, int n) {
  if (!m.exact()) throw Error(ErrorKind::NonRationalWeights, "walk enumeration needs exact rational weights");
  if (n < 0) throw Error(ErrorKind::MalformedInput, "series order must be nonnegative");
  TruncatedSeries q(n);
  q.at(0, 0, 0) = 1;
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i <= k + 1; ++i)
      for (int j = 0; j <= k + 1; ++j) {
        Rational acc = 0;
        for (int a = -1; a <= 1; ++a)
          for (int b = -1; b <= 1; ++b) {
            const Rational& w = m.weight(a, b);
            if (w == 0) continue;
            const Rational& prev = q.coeff(i - a, j - b, k);
            if (prev != 0) acc += w * prev;
          }
        if (acc != 0) q.at(i, j, k + 1) = std::move(acc);
      }
  }
  return q;
}

FunctionalEquationReport verify_functional_equation(const WeightGrid<Rational>& d, const TruncatedSeries& q) {
  const int n = q.order();
  FunctionalEquationReport r;
  r.order = n;
  r.residual_max = 0;
  // Multiplying by t shifts a layer up by one, so t never appears explicitly.
  for (int k = 0; k <= n; ++k) {
    for (int i = 0; i <= k + 1; ++i)
      for (int j = 0; j <= k + 1; ++j) {
        // K Q = xy Q - t sum d_{a,b} x^{a+1} y^{b+1} Q.
        Rational v = q.coeff(i - 1, j - 1, k);
        Rational shifted = 0;
        for (int a = -1; a <= 1; ++a)
          for (int b = -1; b <= 1; ++b)
            if (d(a, b) != 0) shifted += d(a, b) * q.coeff(i - a - 1, j - b - 1, k - 1);
        // Boundary terms: K(x,0) Q(x,0) lives on j = 0, K(0,y) Q(0,y) on i = 0.
        Rational boundary = 0;
        if (j == 0)
          for (int a = -1; a <= 1; ++a)
            if (d(a, -1) != 0) boundary -= d(a, -1) * q.coeff(i - a - 1, 0, k - 1);
        if (i == 0)
          for (int b = -1; b <= 1; ++b)
            if (d(-1, b) != 0) boundary -= d(-1, b) * q.coeff(0, j - b - 1, k - 1);
        if (i == 0 && j == 0) boundary += d(-1, -1) * q.coeff(0, 0, k - 1);
        v -= shifted;
        v -= boundary;
        if (i == 1 && j == 1 && k == 0) v -= 1;
        if (v != 0) {
          ++r.nonzero_terms;
          r.residual_max = std::max(r.residual_max, Rational(abs(v)));
        }
      }
  }
  return r;
}

FunctionalEquationReport verify_functional_equation(const WalkModel& m, int n) {
  return verify_functional_equation(m.weights(), walk_series(m, n));
}

}  // namespace kc
