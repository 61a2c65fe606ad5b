#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace curvegraph {

// Malformed input: ragged matrices, unknown names, unparseable files.
class StructuralError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A stated precondition fails: parameter out of range, proviso violated,
// operation asked of a group it does not apply to.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A structurally sound configuration fails the twist-system checks.
// Carries the names of the failed checks so callers can report them.
class ValidationError : public std::runtime_error {
public:
    ValidationError(const std::string& what, std::vector<std::string> failed)
        : std::runtime_error(what), failed_checks(std::move(failed)) {}
    std::vector<std::string> failed_checks;
};

// Certification produced no usable exponent (j = 0).
class EmptyCertificateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Spectral precondition failed or the iteration did not reach tolerance.
class SpectralError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace curvegraph
