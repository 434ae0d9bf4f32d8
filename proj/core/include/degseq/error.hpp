#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace degseq {

enum class ErrorCode {
  InvalidGraph,
  InvalidSequence,
  IsolatedVertex,
  SelfLoop,
  InvalidUnion,
  NotConnected,
  NotConnectedSequence,
  NotGraphic,
  DomainTooSmall,
  LimitExceeded,
  CannotMerge,
  InvalidStep,
  ParseError,
  Io,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so that
// callers (the CLI in particular) can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

enum class StepFault {
  WrongKind,
  DuplicateEdge,
  DanglingVertex,
  SelfLoop,
  BadLabels,
};

std::string_view to_string(StepFault fault);

class InvalidStepError : public Error {
 public:
  InvalidStepError(std::size_t index, StepFault fault, const std::string& detail);

  std::size_t index() const noexcept { return index_; }
  StepFault fault() const noexcept { return fault_; }

 private:
  std::size_t index_;
  StepFault fault_;
};

class ParseError : public Error {
 public:
  // line and column are 1-based; line is 0 for single-line inputs.
  ParseError(std::size_t line, std::size_t column, const std::string& detail);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace degseq
