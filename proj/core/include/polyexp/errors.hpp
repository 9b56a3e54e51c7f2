#pragma once

#include <stdexcept>
#include <string>

namespace polyexp {

// All domain errors carry a stable machine-readable code alongside the message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

#define POLYEXP_ERROR(NAME)                                              \
    class NAME : public Error {                                          \
    public:                                                              \
        explicit NAME(const std::string& msg) : Error(#NAME, msg) {}     \
    }

POLYEXP_ERROR(ConstantTermVanished);
POLYEXP_ERROR(NegativeExponent);
POLYEXP_ERROR(NotInCone);
POLYEXP_ERROR(EmptySpectrum);
POLYEXP_ERROR(OutOfRange);
POLYEXP_ERROR(TiedLeadingExponent);
POLYEXP_ERROR(ZeroOnBoundary);
POLYEXP_ERROR(CollisionDetected);
POLYEXP_ERROR(PathLeftCone);
POLYEXP_ERROR(DegenerateTruncation);
POLYEXP_ERROR(Inconclusive);
POLYEXP_ERROR(NoFrontier);
POLYEXP_ERROR(BudgetExceeded);
POLYEXP_ERROR(NotInvariant);
POLYEXP_ERROR(BadEigenvalue);

#undef POLYEXP_ERROR

}  // namespace polyexp
