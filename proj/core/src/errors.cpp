#include "prime_scope/errors.hpp"

namespace prime_scope {

std::string_view error_code_name(ErrorCode code)
{
    switch (code) {
    case ErrorCode::NotPIntegral: return "NotPIntegral";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::NotMonic: return "NotMonic";
    case ErrorCode::Reducible: return "Reducible";
    case ErrorCode::UncertifiedIrreducibility: return "UncertifiedIrreducibility";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::IndexDivisible: return "IndexDivisible";
    case ErrorCode::NegativeValuation: return "NegativeValuation";
    case ErrorCode::NonMonic: return "NonMonic";
    case ErrorCode::NoRoot: return "NoRoot";
    case ErrorCode::PrecisionOverflow: return "PrecisionOverflow";
    case ErrorCode::NoRootInClosure: return "NoRootInClosure";
    case ErrorCode::NonDisjoint: return "NonDisjoint";
    case ErrorCode::LocalWitnessInvalid: return "LocalWitnessInvalid";
    case ErrorCode::NoneWithinBound: return "NoneWithinBound";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::InverseOfZero: return "InverseOfZero";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::Negative: return "Negative";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

DomainError::DomainError(ErrorCode code, std::string detail, std::optional<std::string> clause)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + detail),
      code_(code), detail_(std::move(detail)), clause_(std::move(clause))
{
}

void raise(ErrorCode code, std::string detail, std::optional<std::string> clause)
{
    throw DomainError(code, std::move(detail), std::move(clause));
}

} // namespace prime_scope
