#include "kernelcurve/rational.hpp"

#include "kernelcurve/error.hpp"

#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstring>

namespace kc {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

[[noreturn]] void bad(std::string_view text) {
  throw Error(ErrorKind::MalformedInput,
              "not a rational or decimal literal: '" + std::string(text) + "'");
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) bad(whole);
  // A leading zero would select octal in the BigInt string constructor.
  while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
  BigInt v{std::string(s)};
  return neg ? BigInt(-v) : v;
}

BigInt pow10(unsigned n) {
  BigInt p = 1;
  for (unsigned i = 0; i < n; ++i) p *= 10;
  return p;
}

}  // namespace

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::NegativeWeight: return "NegativeWeight";
    case ErrorKind::EmptyModel: return "EmptyModel";
    case ErrorKind::TOutOfRange: return "TOutOfRange";
    case ErrorKind::NonRationalWeights: return "NonRationalWeights";
    case ErrorKind::DegenerateModel: return "DegenerateModel";
    case ErrorKind::WrongGenus: return "WrongGenus";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::ZeroForm: return "ZeroForm";
    case ErrorKind::NonRealBranchPoints: return "NonRealBranchPoints";
    case ErrorKind::SignMismatch: return "SignMismatch";
    case ErrorKind::NonRootEndpoints: return "NonRootEndpoints";
    case ErrorKind::Pole: return "Pole";
    case ErrorKind::Omega3OutOfRange: return "Omega3OutOfRange";
    case ErrorKind::IdenticallyZeroSlice: return "IdenticallyZeroSlice";
    case ErrorKind::OffCurveInput: return "OffCurveInput";
    case ErrorKind::IndeterminatePoint: return "IndeterminatePoint";
    case ErrorKind::StartIsSingular: return "StartIsSingular";
  }
  return "Unknown";
}

bool is_model_error(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MalformedInput:
    case ErrorKind::NegativeWeight:
    case ErrorKind::EmptyModel:
    case ErrorKind::TOutOfRange:
    case ErrorKind::NonRationalWeights:
    case ErrorKind::DegenerateModel:
    case ErrorKind::WrongGenus:
    case ErrorKind::OffCurveInput:
    case ErrorKind::StartIsSingular:
      return true;
    default:
      return false;
  }
}

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) bad(text);

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(s.substr(0, slash), text);
    BigInt den = parse_integer(s.substr(slash + 1), text);
    if (den == 0) bad(text);
    return Rational(num, den);
  }

  bool neg = false;
  if (s.front() == '-' || s.front() == '+') {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  long long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view es = s.substr(e + 1);
    bool eneg = false;
    if (!es.empty() && (es.front() == '-' || es.front() == '+')) {
      eneg = es.front() == '-';
      es.remove_prefix(1);
    }
    if (!all_digits(es) || es.size() > 6) bad(text);
    exponent = std::stoll(std::string(es));
    if (eneg) exponent = -exponent;
    s = s.substr(0, e);
  }
  std::string_view int_part = s, frac_part;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    int_part = s.substr(0, dot);
    frac_part = s.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) bad(text);
  if (!int_part.empty() && !all_digits(int_part)) bad(text);
  if (!frac_part.empty() && !all_digits(frac_part)) bad(text);

  BigInt mantissa = parse_integer(std::string(int_part) + std::string(frac_part), text);
  exponent -= static_cast<long long>(frac_part.size());
  Rational r = exponent >= 0 ? Rational(mantissa * pow10(static_cast<unsigned>(exponent)))
                             : Rational(mantissa, pow10(static_cast<unsigned>(-exponent)));
  return neg ? Rational(-r) : r;
}

std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational exact_rational(double v) {
  if (!std::isfinite(v)) throw Error(ErrorKind::MalformedInput, "non-finite number");
  if (v == 0.0) return Rational(0);
  int exp = 0;
  double m = std::frexp(v, &exp);  // v = m * 2^exp, 0.5 <= |m| < 1
  auto mant = static_cast<std::int64_t>(std::ldexp(m, 53));
  exp -= 53;
  BigInt num = mant;
  if (exp >= 0) return Rational(num << exp);
  BigInt den = 1;
  den <<= -exp;
  return Rational(num, den);
}

}  // namespace kc
