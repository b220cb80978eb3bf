#ifndef BRIESKORN_ERROR_HPP
#define BRIESKORN_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace brieskorn {

enum class ErrorCode {
    MalformedInput,
    NotFullDimensional,
    NotAVertex,
    OriginNotInterior,
    NotReflexive,
    NotSimplicial,
    MissingCoefficient,
    ZeroCoefficient,
    ZeroPolynomial,
    NotConvenient,
    NondegeneracyUnverified,
    DegeneracyDetected,
    SpectrumAsymmetry,
    NotNilpotent,
    ShapeMismatch,
    InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

}  // namespace brieskorn

#endif
