#include "kernelcurve/classify.hpp"

#include "kernelcurve/error.hpp"

#include <algorithm>
#include <cmath>

namespace kc {

std::string Degeneracy::label() const {
  switch (kind) {
    case DegeneracyKind::NonDegenerate: return "NonDegenerate";
    case DegeneracyKind::Case1: return "Case1(i=" + std::to_string(index) + ")";
    case DegeneracyKind::Case2: return "Case2(j=" + std::to_string(index) + ")";
    case DegeneracyKind::Case3:
      return diagonal == DiagonalKind::Diagonal ? "Case3(diagonal)" : "Case3(antidiagonal)";
  }
  return "Unknown";
}

Degeneracy is_degenerate(const WalkModel& m) {
  const StepSet s = m.steps();
  for (int i : {1, -1}) {
    if (!s.contains({i, -1}) && !s.contains({i, 0}) && !s.contains({i, 1}))
      return {DegeneracyKind::Case1, i, DiagonalKind::Diagonal};
  }
  for (int j : {1, -1}) {
    if (!s.contains({-1, j}) && !s.contains({0, j}) && !s.contains({1, j}))
      return {DegeneracyKind::Case2, j, DiagonalKind::Diagonal};
  }
  auto within = [&](Step a, Step b) {
    return std::all_of(s.members().begin(), s.members().end(), [&](Step x) { return x == a || x == b; });
  };
  if (within({1, 1}, {-1, -1})) return {DegeneracyKind::Case3, 0, DiagonalKind::Diagonal};
  if (within({-1, 1}, {1, -1})) return {DegeneracyKind::Case3, 0, DiagonalKind::Antidiagonal};
  return {};
}

std::optional<Step> half_plane_normal(const StepSet& steps) {
  static constexpr std::array<Step, 8> normals{{
      {1, 1}, {1, -1}, {-1, -1}, {-1, 1}, {1, 0}, {0, 1}, {-1, 0}, {0, -1}}};
  for (Step n : normals) {
    const bool ok = std::all_of(steps.members().begin(), steps.members().end(),
                                [&](Step s) { return n.i * s.i + n.j * s.j >= 0; });
    if (ok) return n;
  }
  return std::nullopt;
}

namespace {

CurvePoint omega_for(const FamilyTransform& f) {
  // Family 1 has its double point at ([0:1],[0:1]); the others follow by
  // inverting the reflected coordinates.
  return f.apply(CurvePoint{ProjPoint(0.0, 1.0), ProjPoint(0.0, 1.0)});
}

std::optional<FamilyTransform> family_of(Step normal) {
  for (const FamilyTransform& f : kFamilies)
    if (f.si == normal.i && f.sj == normal.j) return f;
  return std::nullopt;
}

ClassificationReport classify_impl(const WalkModel& m, const QuarticForm<double>& d1,
                                   const QuarticForm<double>& d2, double tol) {
  ClassificationReport r;
  r.degeneracy = is_degenerate(m);
  if (r.degeneracy.degenerate()) return r;

  r.delta1_double_root = has_multiple_root(quartic_roots(d1, tol));
  r.delta2_double_root = has_multiple_root(quartic_roots(d2, tol));

  const std::optional<Step> normal = half_plane_normal(m.steps());
  const bool exact_genus_zero = normal.has_value();
  if (exact_genus_zero != r.delta1_double_root || exact_genus_zero != r.delta2_double_root) {
    throw Error(ErrorKind::InternalInconsistency,
                std::string("half-plane criterion says genus ") + (exact_genus_zero ? "0" : "1") +
                    " but discriminant double roots: Delta1=" + (r.delta1_double_root ? "yes" : "no") +
                    ", Delta2=" + (r.delta2_double_root ? "yes" : "no"));
  }
  if (!exact_genus_zero) {
    r.genus = 1;
    return r;
  }
  r.genus = 0;
  r.half_plane_witness = normal;
  r.family = family_of(*normal);
  if (!r.family)
    throw Error(ErrorKind::InternalInconsistency, "nondegenerate half-plane model with an axis normal");
  r.omega = omega_for(*r.family);
  return r;
}

// Lemma-table roots (a3, a4) of c2 x^2 + c3 x^3 + c4 x^4 for the first family.
std::pair<ProjPoint, ProjPoint> family_one_roots(const QuarticForm<Rational>& exact) {
  const double c2 = to_double(exact.c[2]), c3 = to_double(exact.c[3]), c4 = to_double(exact.c[4]);
  if (exact.c[4] == 0) return {ProjPoint::infinity(), ProjPoint(-c2, c3)};
  const Complex root = std::sqrt(Complex(c3 * c3 - 4.0 * c2 * c4));
  return {ProjPoint(-c3 - root, 2.0 * c4), ProjPoint(-c3 + root, 2.0 * c4)};
}

std::vector<ProjectiveRoot> simple_real_roots(const QuarticForm<double>& d, double tol, const char* name) {
  std::vector<ProjectiveRoot> roots = quartic_roots(d, tol);
  if (roots.size() != 4 || has_multiple_root(roots))
    throw Error(ErrorKind::InternalInconsistency, std::string(name) + " does not have four simple roots");
  for (const ProjectiveRoot& r : roots) {
    const auto v = r.root.affine_value();
    if (v && std::abs(v->imag()) > tol * std::max(1.0, std::abs(v->real())))
      throw Error(ErrorKind::NonRealBranchPoints,
                  std::string(name) + " has a non-real root " + std::to_string(v->real()) + "+" +
                      std::to_string(v->imag()) + "i");
  }
  return roots;
}

BranchData branch_impl(const WalkModel& m, const ClassificationReport& report, const QuarticForm<double>& d1,
                       const QuarticForm<double>& d2, double tol) {
  if (report.degeneracy.degenerate())
    throw Error(ErrorKind::DegenerateModel, "branch points need a nondegenerate model (" +
                                                report.degeneracy.label() + ")");
  BranchData out;
  if (*report.genus == 0) {
    const FamilyTransform& f = *report.family;
    const WalkModel reduced = m.reflected(f.si, f.sj);
    const auto [a3, a4] = family_one_roots(discriminant_exact(reduced, Axis::X));
    const auto [b3, b4] = family_one_roots(discriminant_exact(reduced, Axis::Y));
    out.a = {report.omega->x, report.omega->x, f.apply_x(a3), f.apply_x(a4)};
    out.b = {report.omega->y, report.omega->y, f.apply_y(b3), f.apply_y(b4)};
    out.a_multiplicity = {2, 2, 1, 1};
    out.b_multiplicity = {2, 2, 1, 1};
    out.labeling = BranchLabeling::GenusZeroCanonical;
    return out;
  }
  out.a = label_genus_one_roots(simple_real_roots(d1, tol, "Delta1"), d1, tol);
  out.b = label_genus_one_roots(simple_real_roots(d2, tol, "Delta2"), d2, tol);
  out.labeling = BranchLabeling::GenusOneSorted;
  return out;
}

}  // namespace

std::array<ProjPoint, 4> label_genus_one_roots(const std::vector<ProjectiveRoot>& roots,
                                               const QuarticForm<double>& d, double) {
  // Cyclic order on RP^1: finite roots ascending, then infinity.
  std::vector<double> finite;
  bool has_infinity = false;
  for (const ProjectiveRoot& r : roots) {
    if (auto v = r.root.affine_value()) finite.push_back(v->real());
    else has_infinity = true;
  }
  std::sort(finite.begin(), finite.end());
  auto sign_between = [&](double lo, double hi) { return d.at(0.5 * (lo + hi)) > 0.0 ? 1 : -1; };
  auto pt = [](double x) { return ProjPoint::affine(x); };

  if (has_infinity) {
    // Three finite roots r0 < r1 < r2; the arc (r2, +inf) is adjacent to a4.
    const double beyond = finite[2] + std::max(1.0, std::abs(finite[2]));
    const bool negative_above = d.at(beyond) < 0.0;
    const double a3 = negative_above ? finite[2] : finite[0];
    const double a1 = negative_above ? finite[0] : finite[2];
    return {pt(a1), pt(finite[1]), pt(a3), ProjPoint::infinity()};
  }
  // Signs alternate between consecutive roots; pick the rotation whose two
  // arcs are finite and read (negative, positive).
  const int k = sign_between(finite[0], finite[1]) < 0 ? 0 : 1;
  return {pt(finite[static_cast<std::size_t>(k + 2)]), pt(finite[static_cast<std::size_t>((k + 3) % 4)]),
          pt(finite[static_cast<std::size_t>(k)]), pt(finite[static_cast<std::size_t>(k + 1)])};
}

ClassificationReport genus_report(const WalkModel& m, double tol) {
  return classify_impl(m, discriminant(m, Axis::X), discriminant(m, Axis::Y), tol);
}

BranchData branch_points(const WalkModel& m, double tol) {
  const ClassificationReport r = genus_report(m, tol);
  return branch_impl(m, r, discriminant(m, Axis::X), discriminant(m, Axis::Y), tol);
}

KernelCurve::KernelCurve(WalkModel m, double tol)
    : model_(std::move(m)),
      kernel_(decompose(model_)),
      delta1_exact_(discriminant_exact(model_, Axis::X)),
      delta2_exact_(discriminant_exact(model_, Axis::Y)) {
  for (std::size_t i = 0; i < 5; ++i) {
    delta1_.c[i] = to_double(delta1_exact_.c[i]);
    delta2_.c[i] = to_double(delta2_exact_.c[i]);
  }
  report_ = classify_impl(model_, delta1_, delta2_, tol);
  if (report_.degeneracy.degenerate()) return;
  try {
    branches_ = branch_impl(model_, report_, delta1_, delta2_, tol);
  } catch (const Error& e) {
    branch_error_ = e;
  }
}

void KernelCurve::require_nondegenerate() const {
  if (degenerate())
    throw Error(ErrorKind::DegenerateModel, "model is degenerate: " + report_.degeneracy.label());
}

int KernelCurve::genus() const {
  require_nondegenerate();
  return *report_.genus;
}

const BranchData& KernelCurve::branches() const {
  require_nondegenerate();
  if (branch_error_) throw *branch_error_;
  return *branches_;
}

}  // namespace kc
