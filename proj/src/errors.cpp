#include "arrlab/errors.hpp"

namespace arrlab {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::BadParam: return "BadParam";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::NotContained: return "NotContained";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NotRealizable: return "NotRealizable";
    case ErrorCode::BadExplicitForms: return "BadExplicitForms";
    case ErrorCode::EmptyArrangement: return "EmptyArrangement";
    case ErrorCode::AmbientNotPreserved: return "AmbientNotPreserved";
    case ErrorCode::BadElement: return "BadElement";
    case ErrorCode::ImproperMeasure: return "ImproperMeasure";
    case ErrorCode::DegenerateProjection: return "DegenerateProjection";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace arrlab
