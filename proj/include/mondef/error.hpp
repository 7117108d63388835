#pragma once

#include <stdexcept>
#include <string>

namespace mondef {

// Machine-readable failure codes; the CLI surfaces them as {"error": "<code>"}.
enum class ErrorCode {
  EmptyInput,
  UncoveredVertex,
  VertexOutOfRange,
  EmptyVertexSet,
  TooLarge,
  NotPure,
  NotTreeComplex,
  CliqueTreePropertyViolated,
  DimensionMismatch,
  NotSquareFree,
  VariableGenerator,
  UnitGenerator,
  TooManyGenerators,
  ZeroIdeal,
  NotGeneric,
  NotMatroid,
  NotShifted,
  SimplexInput,
  NoApplicableMethod,
  EmptyList,
  InvalidEdge,
  InvalidArgument,
  ParseError,
  InternalAssertion,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace mondef
