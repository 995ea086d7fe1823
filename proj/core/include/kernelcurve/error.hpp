#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kc {

/// Failure taxonomy shared by every module. The CLI maps each kind to an
/// exit code and reports its name in the "error_kind" field.
enum class ErrorKind {
  MalformedInput,
  NegativeWeight,
  EmptyModel,
  TOutOfRange,
  NonRationalWeights,
  DegenerateModel,
  WrongGenus,
  InternalInconsistency,
  ZeroForm,
  NonRealBranchPoints,
  SignMismatch,
  NonRootEndpoints,
  Pole,
  Omega3OutOfRange,
  IdenticallyZeroSlice,
  OffCurveInput,
  IndeterminatePoint,
  StartIsSingular,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// True for errors caused by the model itself (bad input, degenerate model,
/// wrong genus) as opposed to numerical breakdowns.
bool is_model_error(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace kc
