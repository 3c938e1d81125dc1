#include "twistlcd/error.hpp"

namespace twistlcd {

std::string_view error_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::EvenCharacteristic: return "EvenCharacteristic";
        case ErrorCode::FieldTooLarge: return "FieldTooLarge";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::MixedFields: return "MixedFields";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NotSquare: return "NotSquare";
        case ErrorCode::EmptyPointSet: return "EmptyPointSet";
        case ErrorCode::DuplicatePoint: return "DuplicatePoint";
        case ErrorCode::ZeroPoint: return "ZeroPoint";
        case ErrorCode::TooFewPoints: return "TooFewPoints";
        case ErrorCode::DoesNotDivide: return "DoesNotDivide";
        case ErrorCode::OrderCondition: return "OrderCondition";
        case ErrorCode::ZeroLambda: return "ZeroLambda";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::InvalidParams: return "InvalidParams";
        case ErrorCode::WrongMessageLength: return "WrongMessageLength";
        case ErrorCode::RankDeficient: return "RankDeficient";
        case ErrorCode::TooLargeToEnumerate: return "TooLargeToEnumerate";
        case ErrorCode::InternalInconsistency: return "InternalInconsistency";
        case ErrorCode::DimensionRange: return "DimensionRange";
        case ErrorCode::LengthParity: return "LengthParity";
        case ErrorCode::VPattern: return "VPattern";
        case ErrorCode::ConditionZero: return "ConditionZero";
        case ErrorCode::TheoremViolation: return "TheoremViolation";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

}  // namespace twistlcd
