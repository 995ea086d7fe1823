#include "kernelcurve/json_io.hpp"

#include <cstdio>

namespace kc {

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const ProjPoint& p) {
  return Json::array({p.u0().real(), p.u0().imag(), p.u1().real(), p.u1().imag()});
}

Json to_json(const CurvePoint& p) { return Json{{"x", to_json(p.x)}, {"y", to_json(p.y)}}; }

Json model_to_json(const WalkModel& m) {
  Json rows = Json::array();
  for (int j = 1; j >= -1; --j) {
    Json row = Json::array();
    for (int i = -1; i <= 1; ++i) row.push_back(to_string(m.weight(i, j)));
    rows.push_back(row);
  }
  return Json{{"weights", rows}, {"t", to_string(m.t())}};
}

Json to_json(const ClassificationReport& r) {
  Json j;
  j["degeneracy"] = r.degeneracy.label();
  j["genus"] = r.genus ? Json(*r.genus) : Json(nullptr);
  j["omega"] = r.omega ? to_json(*r.omega) : Json(nullptr);
  j["half_plane_witness"] =
      r.half_plane_witness ? Json::array({r.half_plane_witness->i, r.half_plane_witness->j}) : Json(nullptr);
  j["family"] = r.family ? Json(r.family->family) : Json(nullptr);
  j["delta1_double_root"] = r.delta1_double_root;
  j["delta2_double_root"] = r.delta2_double_root;
  return j;
}

Json to_json(const BranchData& b) {
  Json a = Json::array(), bb = Json::array();
  for (std::size_t i = 0; i < 4; ++i) {
    a.push_back(to_json(b.a[i]));
    bb.push_back(to_json(b.b[i]));
  }
  return Json{{"a", a},
              {"b", bb},
              {"a_multiplicity", b.a_multiplicity},
              {"b_multiplicity", b.b_multiplicity},
              {"labeling", b.labeling == BranchLabeling::GenusZeroCanonical ? "GenusZeroCanonical" : "GenusOneSorted"}};
}

Json to_json(const GenusZeroUniformization& u) {
  return Json{{"genus", 0},
              {"q", u.q},
              {"lambda", to_json(u.lambda)},
              {"alpha", u.alpha.c},
              {"beta", u.beta.c},
              {"family", u.family_transform.family},
              {"sqrt_branches", Json{{"alpha", u.alpha_sqrt_sign}, {"beta", u.beta_sqrt_sign}}},
              {"omega", to_json(u.omega)}};
}

Json to_json(const GenusOneUniformization& u) {
  Json labels = Json::array();
  for (const ProjPoint& p : u.branch) labels.push_back(to_json(p));
  return Json{{"genus", 1},
              {"omega1", to_json(u.omega1)},
              {"omega2", u.omega2},
              {"omega3", u.omega3},
              {"omega3_over_omega2", u.omega3 / u.omega2},
              {"g2", to_json(u.lattice.g2())},
              {"g3", to_json(u.lattice.g3())},
              {"D", u.d.c},
              {"branch_labels", labels},
              {"a4_at_infinity", u.a4_at_infinity},
              {"period_ratio_sign", u.period_ratio_sign}};
}

Json to_json(const OrbitReport& r) {
  Json orbit = Json::array();
  for (const CurvePoint& p : r.orbit) orbit.push_back(to_json(p));
  Json j{{"order", r.order ? Json(*r.order) : Json("Unbounded")},
         {"search_limit", r.search_limit},
         {"method", to_string(r.method)},
         {"iteration_order", r.iteration_order ? Json(*r.iteration_order) : Json(nullptr)},
         {"analytic_value", r.analytic_value ? Json(*r.analytic_value) : Json(nullptr)},
         {"warnings", r.warnings},
         {"orbit", orbit}};
  return j;
}

Json to_json(const TruncatedSeries& s) {
  Json terms = Json::object();
  for (const auto& [idx, v] : s.terms())
    terms[std::to_string(idx.i) + "," + std::to_string(idx.j) + "," + std::to_string(idx.k)] = to_string(v);
  return Json{{"order", s.order()}, {"terms", terms}};
}

Json to_json(const FunctionalEquationReport& r) {
  return Json{{"order", r.order}, {"residual_max", to_string(r.residual_max)}, {"nonzero_terms", r.nonzero_terms}};
}

std::string csv_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_cells(const CurvePoint& p) {
  auto cells = [](const ProjPoint& c) {
    const auto v = c.affine_value();
    if (!v) return std::string("inf,inf");
    return csv_number(v->real()) + "," + csv_number(v->imag());
  };
  return cells(p.x) + "," + cells(p.y);
}

}  // namespace kc
