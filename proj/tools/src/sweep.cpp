#include "kernelcurve_cli/sweep.hpp"

#include "kernelcurve/error.hpp"

#include <bit>
#include <charconv>
#include <string>

namespace kc::cli {

std::vector<SubsetModel> all_subset_models(const Rational& t) {
  std::vector<SubsetModel> out;
  out.reserve(255);
  for (unsigned mask = 1; mask < 256; ++mask) {
    WeightGrid<Rational> w;
    const Rational weight(1, std::popcount(mask));
    for (std::size_t b = 0; b < kDirections.size(); ++b)
      if (mask & (1u << b)) w(kDirections[b].i, kDirections[b].j) = weight;
    out.push_back({mask, WalkModel::create(w, t)});
  }
  return out;
}

std::vector<Rational> parse_t_sweep(std::string_view spec) {
  auto fail = [&] {
    return Error(ErrorKind::MalformedInput, "sweep must look like t=a:b:n, got \"" + std::string(spec) + "\"");
  };
  if (!spec.starts_with("t=")) throw fail();
  spec.remove_prefix(2);
  const auto c1 = spec.find(':');
  const auto c2 = spec.rfind(':');
  if (c1 == std::string_view::npos || c1 == c2) throw fail();
  const Rational a = parse_rational(spec.substr(0, c1));
  const Rational b = parse_rational(spec.substr(c1 + 1, c2 - c1 - 1));
  const std::string_view count = spec.substr(c2 + 1);
  int n = 0;
  const auto [ptr, ec] = std::from_chars(count.data(), count.data() + count.size(), n);
  if (ec != std::errc() || ptr != count.data() + count.size() || n < 1) throw fail();
  std::vector<Rational> out;
  for (int k = 0; k < n; ++k) out.push_back(n == 1 ? a : a + (b - a) * k / (n - 1));
  return out;
}

}  // namespace kc::cli
