#include "kernelcurve/error.hpp"
#include "kernelcurve/model.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

using namespace kc;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorKind::InternalInconsistency;
}

}  // namespace

TEST(Rational, ParsesFractionsIntegersAndDecimals) {
  EXPECT_EQ(parse_rational("3/12"), Rational(1, 4));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
  EXPECT_EQ(parse_rational("1e-2"), Rational(1, 100));
  EXPECT_EQ(parse_rational("-2.5E1"), Rational(-25));
  EXPECT_EQ(to_string(Rational(6, 8)), "3/4");
  EXPECT_EQ(to_string(Rational(5)), "5");
}

TEST(Rational, RejectsGarbage) {
  for (const char* bad : {"", "1/0", "a", "1/2/3", "--1", "1.2.3", "e5"})
    EXPECT_EQ(kind_of([&] { parse_rational(bad); }), ErrorKind::MalformedInput) << bad;
}

TEST(Rational, ExactRationalOfDouble) {
  EXPECT_EQ(exact_rational(0.375), Rational(3, 8));
  EXPECT_EQ(to_double(exact_rational(0.1)), 0.1);
}

TEST(WalkModel, NormalizesWeightsAndScalesT) {
  WeightGrid<Rational> w;
  w(1, 0) = 1;
  w(-1, 0) = 1;
  w(0, 1) = 1;
  w(0, -1) = 1;
  const WalkModel m = WalkModel::create(w, Rational(1, 16));
  EXPECT_EQ(m.weight(1, 0), Rational(1, 4));
  EXPECT_EQ(m.t(), Rational(1, 4));
  EXPECT_EQ(m.raw_sum(), Rational(4));
  EXPECT_TRUE(m.exact());
  EXPECT_EQ(m, oracles::simple_walk());
}

TEST(WalkModel, RejectsInvalidInput) {
  WeightGrid<Rational> w;
  EXPECT_EQ(kind_of([&] { WalkModel::create(w, Rational(1, 4)); }), ErrorKind::EmptyModel);
  w(1, 1) = -1;
  w(0, 1) = 2;
  EXPECT_EQ(kind_of([&] { WalkModel::create(w, Rational(1, 4)); }), ErrorKind::NegativeWeight);
  w(1, 1) = 1;
  EXPECT_EQ(kind_of([&] { WalkModel::create(w, Rational(0)); }), ErrorKind::TOutOfRange);
}

TEST(WalkModel, StepsExcludeStayPut) {
  const WalkModel m = oracles::model_from_rows({{"1", "0", "0"}, {"0", "5", "1"}, {"0", "1", "0"}}, "1/16");
  const StepSet s = m.steps();
  EXPECT_EQ(s.size(), 3u);
  EXPECT_TRUE(s.contains({-1, 1}));
  EXPECT_TRUE(s.contains({1, 0}));
  EXPECT_TRUE(s.contains({0, -1}));
  EXPECT_FALSE(s.contains({0, 0}));
}

TEST(WalkModel, ReflectionAndTransposition) {
  const WalkModel g = oracles::gessel();
  const WalkModel r = g.reflected(-1, 1);
  EXPECT_EQ(r.weight(1, 1), g.weight(-1, 1));
  EXPECT_EQ(r.weight(-1, -1), g.weight(1, -1));
  EXPECT_EQ(r.reflected(-1, 1), g);
  const WalkModel k = oracles::kreweras();
  EXPECT_EQ(k.transposed().weight(1, 0), k.weight(0, 1));
  EXPECT_EQ(k.transposed(), k);
}

TEST(ParseModel, ReadsTopRowFirst) {
  const WalkModel m = parse_model(R"({"weights": [[0, "1/4", 0], [0.25, 0, "1/4"], [0, "1/4", 0]], "t": 0.25})");
  EXPECT_EQ(m, oracles::simple_walk());
  const WalkModel n = parse_model(R"({"weights": [[1, 0, 0], [0, 0, 0], [0, 0, 0]], "t": "1/2", "note": 1})");
  EXPECT_EQ(n.weight(-1, 1), Rational(1));
}

TEST(ParseModel, Errors) {
  EXPECT_EQ(kind_of([] { parse_model("{"); }), ErrorKind::MalformedInput);
  EXPECT_EQ(kind_of([] { parse_model(R"({"weights": [[0,0,0]], "t": 1})"); }), ErrorKind::MalformedInput);
  EXPECT_EQ(kind_of([] { parse_model(R"({"weights": [[0,0,0],[0,0,0],[0,0,0]]})"); }), ErrorKind::MalformedInput);
  EXPECT_EQ(kind_of([] { parse_model(R"({"weights": [[0,0,0],[0,0,0],[0,0,0]], "t": "1/4"})"); }),
            ErrorKind::EmptyModel);
  EXPECT_EQ(kind_of([] { parse_model(R"({"weights": [[0,0,0],[0,"x",0],[0,0,0]], "t": "1/4"})"); }),
            ErrorKind::MalformedInput);
}

TEST(ErrorKind, ModelErrorsAreSeparatedFromNumericOnes) {
  EXPECT_TRUE(is_model_error(ErrorKind::DegenerateModel));
  EXPECT_TRUE(is_model_error(ErrorKind::WrongGenus));
  EXPECT_TRUE(is_model_error(ErrorKind::NegativeWeight));
  EXPECT_FALSE(is_model_error(ErrorKind::NonRealBranchPoints));
  EXPECT_FALSE(is_model_error(ErrorKind::Omega3OutOfRange));
  EXPECT_EQ(to_string(ErrorKind::Pole), "Pole");
}
