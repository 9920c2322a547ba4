#include "seifert/error.hpp"

namespace seifert {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NonNegativeCoefficient: return "NonNegativeCoefficient";
        case ErrorKind::ZeroCoefficient: return "ZeroCoefficient";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::ConditionViolation: return "ConditionViolation";
        case ErrorKind::NonNormal: return "NonNormal";
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::RangeViolation: return "RangeViolation";
        case ErrorKind::ParityViolation: return "ParityViolation";
        case ErrorKind::InfiniteOrder: return "InfiniteOrder";
        case ErrorKind::SearchExhausted: return "SearchExhausted";
        case ErrorKind::DegenerateLattice: return "DegenerateLattice";
        case ErrorKind::NotNegativeDefinite: return "NotNegativeDefinite";
        case ErrorKind::NoValidD: return "NoValidD";
    }
    return "Unknown";
}

}  // namespace seifert
