#pragma once

#include <stdexcept>
#include <string>

namespace hyperkit {

/// Malformed input: wrong tensor shape, unknown label, unparsable file.
class StructuralError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input is well-formed but violates a hypergroup axiom or a checked identity.
class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operation is not defined for this input (e.g. characters of a noncommutative hypergroup).
class UnsupportedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Eigenvalue clustering could not separate the characters.
class NumericalDegeneracyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace hyperkit
