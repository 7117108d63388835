#include "mondef/error.hpp"

namespace mondef {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::UncoveredVertex: return "UncoveredVertex";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::EmptyVertexSet: return "EmptyVertexSet";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotPure: return "NotPure";
    case ErrorCode::NotTreeComplex: return "NotTreeComplex";
    case ErrorCode::CliqueTreePropertyViolated: return "CliqueTreePropertyViolated";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotSquareFree: return "NotSquareFree";
    case ErrorCode::VariableGenerator: return "VariableGenerator";
    case ErrorCode::UnitGenerator: return "UnitGenerator";
    case ErrorCode::TooManyGenerators: return "TooManyGenerators";
    case ErrorCode::ZeroIdeal: return "ZeroIdeal";
    case ErrorCode::NotGeneric: return "NotGeneric";
    case ErrorCode::NotMatroid: return "NotMatroid";
    case ErrorCode::NotShifted: return "NotShifted";
    case ErrorCode::SimplexInput: return "SimplexInput";
    case ErrorCode::NoApplicableMethod: return "NoApplicableMethod";
    case ErrorCode::EmptyList: return "EmptyList";
    case ErrorCode::InvalidEdge: return "InvalidEdge";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InternalAssertion: return "InternalAssertion";
  }
  return "Unknown";
}

}  // namespace mondef
