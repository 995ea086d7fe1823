#include "kernelcurve_cli/cli.hpp"

#include "kernelcurve/error.hpp"
#include "kernelcurve/involutions.hpp"
#include "kernelcurve/json_io.hpp"
#include "kernelcurve/series.hpp"
#include "kernelcurve/uniform_g0.hpp"
#include "kernelcurve/uniform_g1.hpp"
#include "kernelcurve_cli/sweep.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

namespace kc::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string command;
  std::string model_path;
  bool json = false;
  bool csv = false;
  int order = 10;
  int steps = 100;
  std::string start;
  std::string grid = "16x16";
  double tol = kOrbitTol;
  std::string sweep;
  std::string coeff;
};

// A computed result in both renderings; csv is empty when not applicable.
struct Output {
  Json json;
  std::string csv;
};

std::vector<double> split_numbers(const std::string& text, std::size_t expected, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(std::string("bad number in ") + what + ": \"" + item + "\"");
    }
  }
  if (out.size() != expected)
    throw UsageError(std::string(what) + " needs " + std::to_string(expected) + " comma-separated values");
  return out;
}

std::pair<int, int> parse_grid(const std::string& g) {
  const auto x = g.find('x');
  try {
    if (x == std::string::npos) throw std::invalid_argument(g);
    const int n = std::stoi(g.substr(0, x)), m = std::stoi(g.substr(x + 1));
    if (n < 1 || m < 1) throw std::invalid_argument(g);
    return {n, m};
  } catch (const std::exception&) {
    throw UsageError("--grid must look like NxM with N, M >= 1, got \"" + g + "\"");
  }
}

Json classify_json(const WalkModel& m) {
  const KernelCurve c(m);
  Json j = to_json(c.report());
  if (!c.degenerate()) {
    try {
      j["branch_points"] = to_json(c.branches());
    } catch (const Error& e) {
      j["branch_points"] = nullptr;
      j["branch_error"] = Json{{"error_kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
    }
  }
  const Json model = model_to_json(m);
  j["weights"] = model["weights"];
  j["t"] = model["t"];
  return j;
}

Output uniformize(const WalkModel& m) {
  const KernelCurve c(m);
  if (c.genus() == 0) return {to_json(uniformize_genus0(c)), {}};
  return {to_json(uniformize_genus1(c)), {}};
}

CurvePoint start_point(const KernelCurve& c, const std::string& start) {
  if (!start.empty()) {
    const std::vector<double> v = split_numbers(start, 4, "--start");
    return {ProjPoint::affine({v[0], v[1]}), ProjPoint::affine({v[2], v[3]})};
  }
  // A generic non-real abscissa keeps clear of branch points and Omega.
  return points_over_x(c, ProjPoint::affine({0.3, 0.2})).first;
}

Output orbit(const WalkModel& m, const Options& o) {
  const KernelCurve c(m);
  const OrbitReport r = sigma_order(c, start_point(c, o.start), o.steps, o.tol);
  std::string csv = "n,x_re,x_im,y_re,y_im\n";
  for (std::size_t n = 0; n < r.orbit.size(); ++n) csv += std::to_string(n + 1) + "," + csv_cells(r.orbit[n]) + "\n";
  return {to_json(r), csv};
}

Output verify(const WalkModel& m, const Options& o) {
  if (o.order < 0) throw UsageError("--order must be nonnegative");
  return {to_json(verify_functional_equation(m, o.order)), {}};
}

Output enumerate(const WalkModel& m, const Options& o) {
  if (o.order < 0) throw UsageError("--order must be nonnegative");
  if (!o.coeff.empty()) {
    const std::vector<double> v = split_numbers(o.coeff, 3, "--coeff");
    const int i = static_cast<int>(v[0]), j = static_cast<int>(v[1]), k = static_cast<int>(v[2]);
    if (k < 0) throw UsageError("--coeff needs k >= 0");
    const TruncatedSeries s = walk_series(m, std::max(k, 0));
    const std::string value = to_string(s.coeff(i, j, k));
    return {Json{{"i", i}, {"j", j}, {"k", k}, {"value", value}}, "i,j,k,value\n" + o.coeff + "," + value + "\n"};
  }
  const TruncatedSeries s = walk_series(m, o.order);
  std::string csv = "i,j,k,value\n";
  for (const auto& [idx, v] : s.terms())
    csv += std::to_string(idx.i) + "," + std::to_string(idx.j) + "," + std::to_string(idx.k) + "," + to_string(v) + "\n";
  return {to_json(s), csv};
}

Output sample(const WalkModel& m, const Options& o) {
  const auto [n, mm] = parse_grid(o.grid);
  const KernelCurve c(m);
  Json rows = Json::array();
  std::string csv = "param_re,param_im,x_re,x_im,y_re,y_im\n";
  auto emit = [&](Complex param, const CurvePoint& p) {
    rows.push_back(Json{{"param", to_json(param)}, {"point", to_json(p)}});
    csv += csv_number(param.real()) + "," + csv_number(param.imag()) + "," + csv_cells(p) + "\n";
  };
  if (c.genus() == 0) {
    // Polar grid: moduli log-spaced over [1e-2, 1e2].
    const GenusZeroUniformization u = uniformize_genus0(c);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < mm; ++b) {
        const double r = std::pow(10.0, -2.0 + 4.0 * (a + 0.5) / n);
        const Complex s = std::polar(r, 2.0 * std::numbers::pi * (b + 0.5) / mm);
        emit(s, phi(u, s));
      }
  } else {
    // Cell centres of the period parallelogram, avoiding the lattice.
    const GenusOneUniformization u = uniformize_genus1(c);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < mm; ++b) {
        const Complex w = u.omega2 * ((a + 0.5) / n) + u.omega1 * ((b + 0.5) / mm);
        emit(w, lambda_map(u, w));
      }
  }
  return {Json{{"genus", c.genus()}, {"samples", rows}}, csv};
}

Output run_one(const Options& o, const WalkModel& m) {
  if (o.command == "classify") return {classify_json(m), {}};
  if (o.command == "uniformize") return uniformize(m);
  if (o.command == "orbit") return orbit(m, o);
  if (o.command == "verify") return verify(m, o);
  if (o.command == "enumerate") return enumerate(m, o);
  return sample(m, o);
}

Json error_json(const Error& e) {
  return Json{{"error_kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
}

int exit_code(const Error& e) { return is_model_error(e.kind()) ? kExitModel : kExitNumeric; }

Json sweep_entry(const Options& o, const WalkModel& m, Json head) {
  try {
    head["result"] = run_one(o, m).json;
  } catch (const Error& e) {
    head["error"] = error_json(e);
  }
  return head;
}

int run_sweep(const Options& o, const WalkModel& base, std::ostream& out) {
  Json results = Json::array();
  if (o.sweep == "all-subsets") {
    for (const SubsetModel& s : all_subset_models(base.t())) {
      Json steps = Json::array();
      for (const Step& st : s.model.steps().members()) steps.push_back(Json::array({st.i, st.j}));
      results.push_back(sweep_entry(o, s.model, Json{{"mask", s.mask}, {"steps", steps}}));
    }
  } else {
    for (const Rational& t : parse_t_sweep(o.sweep)) {
      Json head{{"t", to_string(t)}};
      try {
        results.push_back(sweep_entry(o, WalkModel::create(base.weights(), t), head));
      } catch (const Error& e) {
        head["error"] = error_json(e);
        results.push_back(head);
      }
    }
  }
  out << Json{{"command", o.command}, {"sweep", o.sweep}, {"results", results}}.dump(2) << "\n";
  return kExitOk;
}

WalkModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read model file \"" + path + "\"");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_model(buf.str());
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Kernel curves of weighted quadrant walks", "kernelcurve"};
  app.add_option("command", o.command, "classify | uniformize | orbit | verify | enumerate | sample")
      ->required()
      ->check(CLI::IsMember({"classify", "uniformize", "orbit", "verify", "enumerate", "sample"}));
  app.add_option("model", o.model_path, "Model JSON file")->required();
  auto* json_flag = app.add_flag("--json", o.json, "JSON output (default)");
  app.add_flag("--csv", o.csv, "CSV output (orbit, enumerate, sample)")->excludes(json_flag);
  app.add_option("--order", o.order, "Series truncation order");
  app.add_option("--steps", o.steps, "Maximum number of sigma iterations");
  app.add_option("--start", o.start, "Orbit start \"x_re,x_im,y_re,y_im\"");
  app.add_option("--grid", o.grid, "Sample grid NxM");
  app.add_option("--tol", o.tol, "Orbit closure tolerance")->check(CLI::PositiveNumber);
  app.add_option("--sweep", o.sweep, "all-subsets or t=a:b:n");
  app.add_option("--coeff", o.coeff, "Single coefficient \"i,j,k\" for enumerate");

  auto usage = [&](const std::string& msg) {
    err << Json{{"error_kind", "Usage"}, {"message", msg}}.dump() << "\n";
    return kExitUsage;
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return usage(e.what());
  }

  try {
    const WalkModel m = load_model(o.model_path);
    if (!o.sweep.empty()) {
      if (o.csv) return usage("--csv cannot be combined with --sweep");
      return run_sweep(o, m, out);
    }
    const Output result = run_one(o, m);
    if (o.csv) {
      if (result.csv.empty()) return usage("--csv is not available for " + o.command);
      out << result.csv;
    } else {
      out << result.json.dump(2) << "\n";
    }
    return kExitOk;
  } catch (const UsageError& e) {
    return usage(e.what());
  } catch (const Error& e) {
    err << error_json(e).dump() << "\n";
    return exit_code(e);
  }
}

}  // namespace kc::cli
