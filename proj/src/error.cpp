#include "brieskorn/error.hpp"

namespace brieskorn {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::MalformedInput: return "MalformedInput";
        case ErrorCode::NotFullDimensional: return "NotFullDimensional";
        case ErrorCode::NotAVertex: return "NotAVertex";
        case ErrorCode::OriginNotInterior: return "OriginNotInterior";
        case ErrorCode::NotReflexive: return "NotReflexive";
        case ErrorCode::NotSimplicial: return "NotSimplicial";
        case ErrorCode::MissingCoefficient: return "MissingCoefficient";
        case ErrorCode::ZeroCoefficient: return "ZeroCoefficient";
        case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorCode::NotConvenient: return "NotConvenient";
        case ErrorCode::NondegeneracyUnverified: return "NondegeneracyUnverified";
        case ErrorCode::DegeneracyDetected: return "DegeneracyDetected";
        case ErrorCode::SpectrumAsymmetry: return "SpectrumAsymmetry";
        case ErrorCode::NotNilpotent: return "NotNilpotent";
        case ErrorCode::ShapeMismatch: return "ShapeMismatch";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace brieskorn
