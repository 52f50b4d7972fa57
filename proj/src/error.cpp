#include "eacode/error.hpp"

namespace eacode {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotPrimePower: return "NotPrimePower";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::Singular: return "Singular";
        case ErrorCode::NoSolution: return "NoSolution";
        case ErrorCode::DuplicateEvaluationPoint: return "DuplicateEvaluationPoint";
        case ErrorCode::ZeroMultiplier: return "ZeroMultiplier";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NotContained: return "NotContained";
        case ErrorCode::FieldTooSmall: return "FieldTooSmall";
        case ErrorCode::FieldMismatch: return "FieldMismatch";
        case ErrorCode::CaseMismatch: return "CaseMismatch";
        case ErrorCode::ParamMismatch: return "ParamMismatch";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::PatternMismatch: return "PatternMismatch";
        case ErrorCode::TooManyPatterns: return "TooManyPatterns";
        case ErrorCode::Infeasible: return "Infeasible";
        case ErrorCode::InconsistentObservation: return "InconsistentObservation";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::UndefinedForZeroKB: return "UndefinedForZeroKB";
        case ErrorCode::InfeasibleScheme: return "InfeasibleScheme";
        case ErrorCode::NonInvertible: return "NonInvertible";
        case ErrorCode::LayoutMismatch: return "LayoutMismatch";
        case ErrorCode::UnsupportedAlphabet: return "UnsupportedAlphabet";
        case ErrorCode::BadFormat: return "BadFormat";
    }
    return "Unknown";
}

}  // namespace eacode
