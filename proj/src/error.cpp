#include "gbs/error.hpp"

namespace gbs {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::ZeroLabel: return "ZeroLabel";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::DividesModulus: return "DividesModulus";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::IsLoop: return "IsLoop";
    case ErrorCode::LabelNotUnit: return "LabelNotUnit";
    case ErrorCode::UnknownTarget: return "UnknownTarget";
    case ErrorCode::NotDefined: return "NotDefined";
    case ErrorCode::ModularImageTooBig: return "ModularImageTooBig";
    case ErrorCode::Elementary: return "Elementary";
    case ErrorCode::ConditionFails: return "ConditionFails";
    case ErrorCode::NotAPath: return "NotAPath";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::UsageError: return "UsageError";
  }
  return "Unknown";
}

}  // namespace gbs
