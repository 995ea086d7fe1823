#pragma once

#include "kernelcurve/classify.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kc {

inline constexpr double kOnCurveTol = 1e-7;
inline constexpr double kOrbitTol = 1e-8;

/// The switch iota_k (k = 1 keeps x, k = 2 keeps y). The kept coordinate is
/// copied, not recomputed.
/// Throws OffCurveInput, IndeterminatePoint, DegenerateModel.
CurvePoint iota(const KernelCurve& c, int k, const CurvePoint& p, double on_curve_tol = kOnCurveTol);
CurvePoint iota(const WalkModel& m, int k, const CurvePoint& p);

/// The two curve points over x (equal when x is a branch point).
std::pair<CurvePoint, CurvePoint> points_over_x(const KernelCurve& c, const ProjPoint& x);

enum class Direction { Forward, Inverse };

/// Forward is iota2 o iota1, inverse is iota1 o iota2.
CurvePoint sigma(const KernelCurve& c, const CurvePoint& p, Direction dir = Direction::Forward,
                 double on_curve_tol = kOnCurveTol);
CurvePoint sigma(const WalkModel& m, const CurvePoint& p, Direction dir = Direction::Forward);

/// Points fixed by iota_k: one per distinct root of Delta_k, the other
/// coordinate being the double root of the fibre.
std::vector<CurvePoint> fixed_points(const KernelCurve& c, int k);
std::vector<CurvePoint> fixed_points(const WalkModel& m, int k);

enum class OrderMethod { IterationClosure, GenusZeroMultiplier, GenusOnePeriodRatio };
std::string to_string(OrderMethod m);

struct OrbitReport {
  /// Finite order, or nullopt for Unbounded(search_limit).
  std::optional<int> order;
  int search_limit = 0;
  OrderMethod method = OrderMethod::IterationClosure;
  /// Iterates sigma^1(start), sigma^2(start), ...
  std::vector<CurvePoint> orbit;
  /// Order seen by plain iteration, when it closed.
  std::optional<int> iteration_order;
  /// The period ratio omega3/omega2 (genus 1) or multiplier q (genus 0).
  std::optional<double> analytic_value;
  std::vector<std::string> warnings;

  bool unbounded() const { return !order.has_value(); }
};

/// Iterates sigma up to n_max times and, where available, decides the order
/// analytically (multiplier in genus 0, period ratio in genus 1). The
/// analytic verdict wins; disagreement is recorded as a warning.
/// Throws OffCurveInput, StartIsSingular.
OrbitReport sigma_order(const KernelCurve& c, const CurvePoint& start, int n_max, double tol = kOrbitTol);
OrbitReport sigma_order(const WalkModel& m, const CurvePoint& start, int n_max, double tol = kOrbitTol);

/// Smallest denominator q <= max_den with |x - p/q| <= tol, found among the
/// continued-fraction convergents and semiconvergents of x.
std::optional<std::pair<long long, long long>> rational_approximation(double x, long long max_den, double tol);

}  // namespace kc
