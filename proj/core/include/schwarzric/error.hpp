#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace schwarzric {

enum class ErrorKind {
  DivisionByZero,
  PoleEvaluation,
  NotSplitOverRationals,
  ConstantInput,
  ZeroParameter,
  NotTriangular,
  SingularMoebius,
  NonRationalPoles,
  ZeroLeadingCoefficient,
  SyntaxError,
  DivisionByZeroConstant,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Exception carrying a machine-checkable kind and the module that raised it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string module, const std::string& what)
      : std::runtime_error(what), kind_(kind), module_(std::move(module)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& module() const noexcept { return module_; }

 private:
  ErrorKind kind_;
  std::string module_;
};

}  // namespace schwarzric
