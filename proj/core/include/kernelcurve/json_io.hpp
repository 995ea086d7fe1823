#pragma once

#include "kernelcurve/classify.hpp"
#include "kernelcurve/involutions.hpp"
#include "kernelcurve/series.hpp"
#include "kernelcurve/uniform_g0.hpp"
#include "kernelcurve/uniform_g1.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace kc {

using Json = nlohmann::json;

/// [re, im]
Json to_json(Complex z);
/// [re0, im0, re1, im1] of the normalized representative.
Json to_json(const ProjPoint& p);
/// {"x": ..., "y": ...}
Json to_json(const CurvePoint& p);

/// Model in the input format, rationals as "p/q" strings, so the output
/// parses back with parse_model.
Json model_to_json(const WalkModel& m);

Json to_json(const ClassificationReport& r);
Json to_json(const BranchData& b);
Json to_json(const GenusZeroUniformization& u);
Json to_json(const GenusOneUniformization& u);
Json to_json(const OrbitReport& r);
/// {"order": N, "terms": {"i,j,k": "p/q", ...}}
Json to_json(const TruncatedSeries& s);
Json to_json(const FunctionalEquationReport& r);

/// "x_re,x_im,y_re,y_im" cells for one point in the affine chart; an
/// infinite coordinate is written as "inf,inf".
std::string csv_cells(const CurvePoint& p);
/// Full-precision decimal for CSV output.
std::string csv_number(double v);

}  // namespace kc
