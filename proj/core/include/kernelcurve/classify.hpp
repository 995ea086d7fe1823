#pragma once

#include "kernelcurve/error.hpp"
#include "kernelcurve/kernel.hpp"
#include "kernelcurve/model.hpp"
#include "kernelcurve/projective.hpp"
#include "kernelcurve/quartic.hpp"

#include <array>
#include <optional>
#include <string>

namespace kc {

enum class DegeneracyKind { NonDegenerate, Case1, Case2, Case3 };
enum class DiagonalKind { Diagonal, Antidiagonal };

/// Degeneracy verdict. `index` is the vanishing column i (Case1) or row j
/// (Case2); `diagonal` is meaningful for Case3 only.
struct Degeneracy {
  DegeneracyKind kind = DegeneracyKind::NonDegenerate;
  int index = 0;
  DiagonalKind diagonal = DiagonalKind::Diagonal;

  bool degenerate() const { return kind != DegeneracyKind::NonDegenerate; }
  /// "NonDegenerate", "Case1(i=1)", "Case2(j=-1)", "Case3(antidiagonal)", ...
  std::string label() const;
  friend bool operator==(const Degeneracy&, const Degeneracy&) = default;
};

/// Exact test on the support. Checks run in order Case1 (i = 1, then -1),
/// Case2 (j = 1, then -1), Case3; the first match is reported.
Degeneracy is_degenerate(const WalkModel& m);

/// The coordinate change reducing a genus-zero model to the first half-plane
/// family: weights d'_{i,j} = d_{si*i, sj*j}. si = -1 inverts x, sj = -1
/// inverts y. The half-plane normal of family k is (si, sj).
struct FamilyTransform {
  int family = 1;  // 1..4
  int si = 1;
  int sj = 1;

  CurvePoint apply(const CurvePoint& p) const {
    return {si < 0 ? p.x.inverted() : p.x, sj < 0 ? p.y.inverted() : p.y};
  }
  ProjPoint apply_x(const ProjPoint& x) const { return si < 0 ? x.inverted() : x; }
  ProjPoint apply_y(const ProjPoint& y) const { return sj < 0 ? y.inverted() : y; }
};

/// The four genus-zero families in order: normals (1,1), (1,-1), (-1,-1), (-1,1).
inline constexpr std::array<FamilyTransform, 4> kFamilies{{
    {1, 1, 1}, {2, 1, -1}, {3, -1, -1}, {4, -1, 1}}};

struct ClassificationReport {
  Degeneracy degeneracy;
  std::optional<int> genus;
  std::optional<CurvePoint> omega;
  /// Normal (n1, n2) with n.s >= 0 for every step s.
  std::optional<Step> half_plane_witness;
  std::optional<FamilyTransform> family;
  /// Numeric cross-check: whether Delta_1 / Delta_2 showed a double root.
  bool delta1_double_root = false;
  bool delta2_double_root = false;
};

/// Genus from the exact half-plane criterion, cross-checked against the
/// numeric double-root detector on both discriminants. A degenerate model
/// yields a report carrying only the degeneracy verdict.
/// Throws InternalInconsistency when exact and numeric verdicts disagree.
ClassificationReport genus_report(const WalkModel& m, double tol = kDefaultMergeTol);

/// Exact half-plane search over the eight candidate normals, diagonals first
/// in family order, then (1,0), (0,1), (-1,0), (0,-1).
std::optional<Step> half_plane_normal(const StepSet& steps);

enum class BranchLabeling { GenusZeroCanonical, GenusOneSorted };

/// Branch points, index 0..3 holding a1..a4 (resp. b1..b4).
struct BranchData {
  std::array<ProjPoint, 4> a;
  std::array<ProjPoint, 4> b;
  std::array<int, 4> a_multiplicity{1, 1, 1, 1};
  std::array<int, 4> b_multiplicity{1, 1, 1, 1};
  BranchLabeling labeling = BranchLabeling::GenusOneSorted;
};

BranchData branch_points(const WalkModel& m, double tol = kDefaultMergeTol);

/// Genus-one labels for the four simple real roots of a discriminant D:
/// returns (a1, a2, a3, a4) such that D < 0 between a3 and a4 and D > 0
/// between a4 and a1, the arcs being those of RP^1 free of other roots.
/// With positive leading coefficient this is (r3, r4, r1, r2) for sorted
/// roots r1 < r2 < r3 < r4. A root at infinity is always a4.
std::array<ProjPoint, 4> label_genus_one_roots(const std::vector<ProjectiveRoot>& roots,
                                               const QuarticForm<double>& d, double tol);

/// The model together with everything derived from it that the involution
/// and uniformization code needs. Immutable after construction.
class KernelCurve {
 public:
  explicit KernelCurve(WalkModel m, double tol = kDefaultMergeTol);

  const WalkModel& model() const { return model_; }
  const KernelDecomposition<double>& kernel() const { return kernel_; }
  const QuarticForm<double>& delta(Axis axis) const { return axis == Axis::X ? delta1_ : delta2_; }
  const QuarticForm<Rational>& delta_exact(Axis axis) const {
    return axis == Axis::X ? delta1_exact_ : delta2_exact_;
  }
  const ClassificationReport& report() const { return report_; }

  bool degenerate() const { return report_.degeneracy.degenerate(); }
  /// Throws DegenerateModel.
  int genus() const;
  /// Throws DegenerateModel, or the error met while locating the branch
  /// points (e.g. NonRealBranchPoints).
  const BranchData& branches() const;

  Complex eval(const CurvePoint& p) const { return kernel_eval(kernel_, p); }
  double residual(const CurvePoint& p) const { return std::abs(eval(p)); }
  bool on_curve(const CurvePoint& p, double tol) const { return residual(p) <= tol; }

  void require_nondegenerate() const;

 private:
  WalkModel model_;
  KernelDecomposition<double> kernel_;
  QuarticForm<Rational> delta1_exact_, delta2_exact_;
  QuarticForm<double> delta1_, delta2_;
  ClassificationReport report_;
  std::optional<BranchData> branches_;
  std::optional<Error> branch_error_;
};

}  // namespace kc
