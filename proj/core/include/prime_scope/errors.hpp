#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace prime_scope {

// Error codes shared by every module. The string form is the stable
// machine-readable code emitted by the CLI error JSON.
enum class ErrorCode {
    NotPIntegral,
    ZeroElement,
    NotMonic,
    Reducible,
    UncertifiedIrreducibility,
    DivisionByZero,
    IndexDivisible,
    NegativeValuation,
    NonMonic,
    NoRoot,
    PrecisionOverflow,
    NoRootInClosure,
    NonDisjoint,
    LocalWitnessInvalid,
    NoneWithinBound,
    Unsupported,
    InverseOfZero,
    SyntaxError,
    Negative,
    PreconditionViolated,
    InvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

class DomainError : public std::runtime_error {
public:
    DomainError(ErrorCode code, std::string detail,
                std::optional<std::string> clause = std::nullopt);

    ErrorCode code() const noexcept { return code_; }
    const std::string& detail() const noexcept { return detail_; }
    const std::optional<std::string>& clause() const noexcept { return clause_; }

private:
    ErrorCode code_;
    std::string detail_;
    std::optional<std::string> clause_;
};

[[noreturn]] void raise(ErrorCode code, std::string detail,
                        std::optional<std::string> clause = std::nullopt);

} // namespace prime_scope
