#pragma once

#include <stdexcept>
#include <string>

namespace ag {

enum class ErrorKind {
    ParseError,
    ExponentNotAllowed,
    OrderExceeded,
    NotInvertible,
    DomainError,
    SingularJacobian,
    NotDivisorPreserving,
    ResidueUndefined,
    NotFlat,
    PolarInput,
    DegenerateGauge,
    NotLogarithmic,
    NotTorsionFree,
    NotIntegrable,
    DegeneratePencil,
    DeltaNotInvertible,
    ParameterOutOfRange,
    SectionsNotDistinct,
    ZeroExponent,
    ResonantExponent,
    NotSmoothFoliation,
    IdenticalFoliations,
    NonReducedWeb,
    CoincidentSlopes,
    UnderdeterminedFit,
    NotTransversal,
    NonGeneric,
    ParabolicMonodromy,
    NonFiniteMonodromy,
    NonConstantCrossRatio,
    IrrationalExponent,
};

const char* error_kind_name(ErrorKind k);

// CLI exit code class: 1 parse, 2 precondition, 3 classification failure.
int error_exit_code(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

}  // namespace ag
