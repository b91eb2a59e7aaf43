#pragma once

#include <stdexcept>
#include <string>

namespace bif {

enum class ErrorCode {
    ZeroPolynomial,
    ConstantPolynomial,
    PointNotAtInfinity,
    NotPrimitive,
    OverrideTooSmall,
    TangentialIntersection,
    DegenerateBand,
    ClassifierDisagreement,
    DepthInsufficient,
    TruncationAmbiguous,
    CountMismatch,
    MatchingUnresolved,
    TraceFailed,
    TraceDiverged,
    ResolutionTooCoarse,
    SyntaxError,
    DegreeLimitExceeded,
    Internal,
};

const char* error_name(ErrorCode c);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

}  // namespace bif
