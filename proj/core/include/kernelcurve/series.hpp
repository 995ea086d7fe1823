#pragma once

#include "kernelcurve/model.hpp"

#include <compare>
#include <map>
#include <vector>

namespace kc {

struct SeriesIndex {
  int i = 0;
  int j = 0;
  int k = 0;
  friend auto operator<=>(const SeriesIndex&, const SeriesIndex&) = default;
};

/// Q(x, y, t) = sum q_{i,j,k} x^i y^j t^k truncated at t^order. Layer k is
/// stored densely over 0 <= i, j <= k.
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  explicit TruncatedSeries(int order);

  int order() const { return order_; }
  /// Zero outside the stored range.
  const Rational& coeff(int i, int j, int k) const;
  Rational& at(int i, int j, int k);

  /// The nonzero coefficients.
  std::map<SeriesIndex, Rational> terms() const;
  /// The same series with layers above m dropped.
  TruncatedSeries truncated(int m) const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  int order_ = 0;
  std::vector<std::vector<Rational>> layers_;
};

/// Exact weighted counts of quadrant walks, including stay-put steps.
/// Throws NonRationalWeights when the model was built from doubles,
/// MalformedInput when n < 0.
TruncatedSeries walk_series(const WalkModel& m, int n);

struct FunctionalEquationReport {
  int order = 0;
  Rational residual_max;
  std::size_t nonzero_terms = 0;

  bool holds() const { return residual_max == 0; }
};

/// Coefficients up to t^n of
///   K Q - xy - K(x,0) Q(x,0) - K(0,y) Q(0,y) - t d_{-1,-1} Q(0,0).
FunctionalEquationReport verify_functional_equation(const WalkModel& m, int n);

/// Same residual with K built from `kernel_weights` (taken as given, not
/// normalized) while Q is supplied separately, so a mismatched pair shows
/// up as a nonzero residual.
FunctionalEquationReport verify_functional_equation(const WeightGrid<Rational>& kernel_weights,
                                                    const TruncatedSeries& q);

}  // namespace kc
