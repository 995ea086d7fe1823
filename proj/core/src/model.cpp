#include "kernelcurve/model.hpp"

#include "kernelcurve/error.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>

namespace kc {

StepSet::StepSet(std::vector<Step> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool StepSet::contains(Step s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

WalkModel WalkModel::create(const WeightGrid<Rational>& weights, const Rational& t) {
  Rational sum = 0;
  for (int i = -1; i <= 1; ++i)
    for (int j = -1; j <= 1; ++j) {
      if (weights(i, j) < 0)
        throw Error(ErrorKind::NegativeWeight,
                    "weight d(" + std::to_string(i) + "," + std::to_string(j) + ") is negative");
      sum += weights(i, j);
    }
  if (sum == 0) throw Error(ErrorKind::EmptyModel, "all weights are zero");

  WalkModel m;
  m.raw_sum_ = sum;
  m.weights_ = weights.map([&](const Rational& d) { return Rational(d / sum); });
  m.t_ = t * sum;
  if (!(m.t_ > 0 && m.t_ < 1))
    throw Error(ErrorKind::TOutOfRange, "t = " + to_string(m.t_) + " after normalization is not in (0,1)");
  bool any_step = false;
  for (Step s : kDirections) any_step = any_step || m.weights_(s.i, s.j) > 0;
  if (!any_step) throw Error(ErrorKind::EmptyModel, "the model has no nonzero step");
  m.refresh_doubles();
  return m;
}

WalkModel WalkModel::from_doubles(const WeightGrid<double>& weights, double t) {
  WalkModel m = create(weights.map([](double d) { return exact_rational(d); }), exact_rational(t));
  m.exact_ = false;
  return m;
}

void WalkModel::refresh_doubles() {
  weights_d_ = weights_.map([](const Rational& d) { return to_double(d); });
  t_d_ = to_double(t_);
}

StepSet WalkModel::steps() const {
  std::vector<Step> members;
  for (Step s : kDirections)
    if (weights_(s.i, s.j) != 0) members.push_back(s);
  return StepSet(std::move(members));
}

WalkModel WalkModel::reflected(int si, int sj) const {
  WalkModel m = *this;
  for (int i = -1; i <= 1; ++i)
    for (int j = -1; j <= 1; ++j) m.weights_(i, j) = weights_(si * i, sj * j);
  m.refresh_doubles();
  return m;
}

WalkModel WalkModel::transposed() const {
  WalkModel m = *this;
  for (int i = -1; i <= 1; ++i)
    for (int j = -1; j <= 1; ++j) m.weights_(i, j) = weights_(j, i);
  m.refresh_doubles();
  return m;
}

namespace {

Rational number_from_json(const nlohmann::json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_number_unsigned()) return Rational(BigInt(v.get<unsigned long long>()));
  // Shortest round-trip text of the double, so "0.1" stays 1/10.
  if (v.is_number_float()) return parse_rational(v.dump());
  throw Error(ErrorKind::MalformedInput, "expected a number or a rational string, got " + v.dump());
}

}  // namespace

WalkModel parse_model(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::MalformedInput, std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("weights") || !doc.contains("t"))
    throw Error(ErrorKind::MalformedInput, "model must be an object with \"weights\" and \"t\"");
  const auto& rows = doc["weights"];
  if (!rows.is_array() || rows.size() != 3)
    throw Error(ErrorKind::MalformedInput, "\"weights\" must be a 3x3 array");

  WeightGrid<Rational> w;
  for (int r = 0; r < 3; ++r) {
    const auto& row = rows[static_cast<std::size_t>(r)];
    if (!row.is_array() || row.size() != 3)
      throw Error(ErrorKind::MalformedInput, "\"weights\" must be a 3x3 array");
    const int j = 1 - r;  // top row is j = 1
    for (int c = 0; c < 3; ++c) w(c - 1, j) = number_from_json(row[static_cast<std::size_t>(c)]);
  }
  return WalkModel::create(w, number_from_json(doc["t"]));
}

StepSet step_set(const WalkModel& m) { return m.steps(); }

}  // namespace kc
