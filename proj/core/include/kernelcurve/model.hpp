#pragma once

#include "kernelcurve/rational.hpp"

#include <array>
#include <compare>
#include <string_view>
#include <vector>

namespace kc {

/// A unit step (i, j) with i, j in {-1, 0, 1}.
struct Step {
  int i = 0;
  int j = 0;
  friend auto operator<=>(const Step&, const Step&) = default;
};

/// The eight nonzero directions, in row-major order from (-1,-1).
inline constexpr std::array<Step, 8> kDirections{{
    {-1, -1}, {-1, 0}, {-1, 1}, {0, -1}, {0, 1}, {1, -1}, {1, 0}, {1, 1}}};

/// 3x3 table indexed by (i, j) in {-1,0,1}^2.
template <class T>
class WeightGrid {
 public:
  WeightGrid() { cells_.fill(T(0)); }

  T& operator()(int i, int j) { return cells_[index(i, j)]; }
  const T& operator()(int i, int j) const { return cells_[index(i, j)]; }

  template <class F>
  auto map(F&& f) const {
    WeightGrid<decltype(f(cells_[0]))> out;
    for (int i = -1; i <= 1; ++i)
      for (int j = -1; j <= 1; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

  friend bool operator==(const WeightGrid&, const WeightGrid&) = default;

 private:
  static constexpr std::size_t index(int i, int j) {
    return static_cast<std::size_t>((i + 1) * 3 + (j + 1));
  }
  std::array<T, 9> cells_;
};

/// Support of the weights, (0,0) excluded. Members are sorted.
class StepSet {
 public:
  explicit StepSet(std::vector<Step> members);

  const std::vector<Step>& members() const { return members_; }
  bool contains(Step s) const;
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  friend bool operator==(const StepSet&, const StepSet&) = default;

 private:
  std::vector<Step> members_;
};

/// A weighted small-step quarter-plane model (d_{i,j}, t), normalized so the
/// weights sum to one. Weights and t are held exactly; `exact()` is false
/// when the model was built from binary doubles rather than rational input.
class WalkModel {
 public:
  /// Normalizes: if the weights sum to s != 1 they are divided by s and t is
  /// multiplied by s. Throws NegativeWeight, EmptyModel or TOutOfRange.
  static WalkModel create(const WeightGrid<Rational>& weights, const Rational& t);
  static WalkModel from_doubles(const WeightGrid<double>& weights, double t);

  const Rational& weight(int i, int j) const { return weights_(i, j); }
  double weight_d(int i, int j) const { return weights_d_(i, j); }
  const WeightGrid<Rational>& weights() const { return weights_; }
  const WeightGrid<double>& weights_d() const { return weights_d_; }

  const Rational& t() const { return t_; }
  double t_d() const { return t_d_; }
  /// Sum of the weights as given, before normalization.
  const Rational& raw_sum() const { return raw_sum_; }
  bool exact() const { return exact_; }

  StepSet steps() const;

  /// Model with weights d'_{i,j} = d_{si*i, sj*j}, si, sj in {+1,-1}.
  WalkModel reflected(int si, int sj) const;
  /// Model with weights d'_{i,j} = d_{j,i}.
  WalkModel transposed() const;

  friend bool operator==(const WalkModel& a, const WalkModel& b) {
    return a.weights_ == b.weights_ && a.t_ == b.t_;
  }

 private:
  WalkModel() = default;
  void refresh_doubles();

  WeightGrid<Rational> weights_;
  WeightGrid<double> weights_d_;
  Rational t_;
  double t_d_ = 0.0;
  Rational raw_sum_;
  bool exact_ = true;
};

/// Parses the model JSON document:
///   {"weights": [[d(-1,1), d(0,1), d(1,1)],
///                [d(-1,0), d(0,0), d(1,0)],
///                [d(-1,-1), d(0,-1), d(1,-1)]],
///    "t": <number or "p/q">}
/// Entries may be JSON numbers or strings holding "p/q" or decimal literals.
/// Extra top-level keys are ignored.
WalkModel parse_model(std::string_view text);

StepSet step_set(const WalkModel& m);

}  // namespace kc
