#ifndef QCMP_ERRORS_HPP
#define QCMP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qcmp {

// Base of all toolkit errors. UserError maps to CLI exit code 1,
// NumericalError to exit code 2.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UserError : Error {
    using Error::Error;
};

struct NumericalError : Error {
    using Error::Error;
};

struct ZeroVectorError : UserError {
    using UserError::UserError;
};

struct DimensionError : UserError {
    using UserError::UserError;
};

struct DomainError : UserError {
    using UserError::UserError;
};

struct ThresholdRangeError : UserError {
    using UserError::UserError;
};

struct NonHermitianError : UserError {
    using UserError::UserError;
};

struct EmptyInputError : UserError {
    using UserError::UserError;
};

struct PreconditionError : UserError {
    using UserError::UserError;
};

struct ParseError : UserError {
    ParseError(const std::string& msg, long line)
        : UserError(msg + " (line " + std::to_string(line) + ")"), line_number(line) {}
    long line_number;
};

struct SizeCapError : NumericalError {
    using NumericalError::NumericalError;
};

struct EpsilonSearchError : NumericalError {
    using NumericalError::NumericalError;
};

struct FamilyVerificationError : NumericalError {
    using NumericalError::NumericalError;
};

struct RegionSamplingError : NumericalError {
    using NumericalError::NumericalError;
};

} // namespace qcmp

#endif
