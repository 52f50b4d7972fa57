#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace eacode {

enum class ErrorCode {
    NotPrimePower,
    DivisionByZero,
    Singular,
    NoSolution,
    DuplicateEvaluationPoint,
    ZeroMultiplier,
    DimensionMismatch,
    NotContained,
    FieldTooSmall,
    FieldMismatch,
    CaseMismatch,
    ParamMismatch,
    LengthMismatch,
    PatternMismatch,
    TooManyPatterns,
    Infeasible,
    InconsistentObservation,
    TooLarge,
    UndefinedForZeroKB,
    InfeasibleScheme,
    NonInvertible,
    LayoutMismatch,
    UnsupportedAlphabet,
    BadFormat,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so that
/// callers (and the CLI) can branch on the kind without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace eacode
