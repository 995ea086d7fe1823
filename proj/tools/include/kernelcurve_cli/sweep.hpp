#pragma once

#include "kernelcurve/model.hpp"

#include <string_view>
#include <vector>

namespace kc::cli {

struct SubsetModel {
  /// Bit b set when kDirections[b] is a step.
  unsigned mask = 0;
  WalkModel model;
};

/// The 255 nonempty step sets with equal weights and d_{0,0} = 0.
std::vector<SubsetModel> all_subset_models(const Rational& t);

/// Parses "t=a:b:n" into n evenly spaced values from a to b inclusive
/// (a alone when n = 1). Throws Error(MalformedInput).
std::vector<Rational> parse_t_sweep(std::string_view spec);

}  // namespace kc::cli
