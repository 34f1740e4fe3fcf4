#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace impartial {

enum class ErrorKind {
  DuplicateLabel,
  UnknownEndpoint,
  CycleDetected,
  SelfLoop,
  NoSource,
  MultipleSources,
  UnknownPosition,
  LabelMismatch,
  NotOptionPreserving,
  NotACongruence,
  NotRefinement,
  NotMembershipClosed,
  InvalidSpec,
  BudgetExceeded,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library. `detail` carries the labels involved
// (the cycle for CycleDetected, the sources for MultipleSources, ...).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::vector<std::string> detail = {})
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        detail_(std::move(detail)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<std::string>& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::vector<std::string> detail_;
};

}  // namespace impartial
