#pragma once

#include <stdexcept>
#include <string>

namespace smc {

enum class ErrorKind {
    ZeroPolynomial,
    SyntaxError,
    UnknownVariable,
    NotHomogeneous,
    NotDegreeD,
    ConeInput,
    NonRationalEigenvalues,
    NotInSpace,
    NotStandardForm,
    HyperplaneArrangement,
    DegenerateCone,
    InternalInconsistency,
    InvalidGraph,
    NotAllowed,
    NonIsolated,
    NotWeightedHomogeneous,
    BadParameters,
    Unsupported,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message, long position = -1)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
          kind_(kind),
          position_(position) {}

    ErrorKind kind() const { return kind_; }

    // Byte offset into the source text; -1 when not a parse error.
    long position() const { return position_; }

private:
    ErrorKind kind_;
    long position_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message, long position = -1) {
    throw Error(kind, message, position);
}

} // namespace smc
