#include "affinegerm/errors.hpp"

namespace ag {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::ExponentNotAllowed: return "ExponentNotAllowed";
        case ErrorKind::OrderExceeded: return "OrderExceeded";
        case ErrorKind::NotInvertible: return "NotInvertible";
        case ErrorKind::DomainError: return "DomainError";
        case ErrorKind::SingularJacobian: return "SingularJacobian";
        case ErrorKind::NotDivisorPreserving: return "NotDivisorPreserving";
        case ErrorKind::ResidueUndefined: return "ResidueUndefined";
        case ErrorKind::NotFlat: return "NotFlat";
        case ErrorKind::PolarInput: return "PolarInput";
        case ErrorKind::DegenerateGauge: return "DegenerateGauge";
        case ErrorKind::NotLogarithmic: return "NotLogarithmic";
        case ErrorKind::NotTorsionFree: return "NotTorsionFree";
        case ErrorKind::NotIntegrable: return "NotIntegrable";
        case ErrorKind::DegeneratePencil: return "DegeneratePencil";
        case ErrorKind::DeltaNotInvertible: return "DeltaNotInvertible";
        case ErrorKind::ParameterOutOfRange: return "ParameterOutOfRange";
        case ErrorKind::SectionsNotDistinct: return "SectionsNotDistinct";
        case ErrorKind::ZeroExponent: return "ZeroExponent";
        case ErrorKind::ResonantExponent: return "ResonantExponent";
        case ErrorKind::NotSmoothFoliation: return "NotSmoothFoliation";
        case ErrorKind::IdenticalFoliations: return "IdenticalFoliations";
        case ErrorKind::NonReducedWeb: return "NonReducedWeb";
        case ErrorKind::CoincidentSlopes: return "CoincidentSlopes";
        case ErrorKind::UnderdeterminedFit: return "UnderdeterminedFit";
        case ErrorKind::NotTransversal: return "NotTransversal";
        case ErrorKind::NonGeneric: return "NonGeneric";
        case ErrorKind::ParabolicMonodromy: return "ParabolicMonodromy";
        case ErrorKind::NonFiniteMonodromy: return "NonFiniteMonodromy";
        case ErrorKind::NonConstantCrossRatio: return "NonConstantCrossRatio";
        case ErrorKind::IrrationalExponent: return "IrrationalExponent";
    }
    return "Unknown";
}

int error_exit_code(ErrorKind k) {
    switch (k) {
        case ErrorKind::ParseError:
        case ErrorKind::ExponentNotAllowed:
        case ErrorKind::IrrationalExponent:
            return 1;
        case ErrorKind::NonGeneric:
        case ErrorKind::ParabolicMonodromy:
        case ErrorKind::NonFiniteMonodromy:
        case ErrorKind::NonConstantCrossRatio:
            return 3;
        default:
            return 2;
    }
}

}  // namespace ag
