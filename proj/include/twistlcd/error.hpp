#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace twistlcd {

enum class ErrorCode {
    NotPrime,
    EvenCharacteristic,
    FieldTooLarge,
    DivisionByZero,
    MixedFields,
    DimensionMismatch,
    NotSquare,
    EmptyPointSet,
    DuplicatePoint,
    ZeroPoint,
    TooFewPoints,
    DoesNotDivide,
    OrderCondition,
    ZeroLambda,
    IndexOutOfRange,
    InvalidParams,
    WrongMessageLength,
    RankDeficient,
    TooLargeToEnumerate,
    InternalInconsistency,
    DimensionRange,
    LengthParity,
    VPattern,
    ConditionZero,
    TheoremViolation,
    ParseError,
};

std::string_view error_name(ErrorCode code);

/// Every failure raised by the library carries a machine-readable code; the
/// CLI prints error_name(code) on stderr and maps codes onto exit statuses.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail);

    ErrorCode code() const noexcept { return code_; }
    std::string_view name() const noexcept { return error_name(code_); }

private:
    ErrorCode code_;
};

}  // namespace twistlcd
