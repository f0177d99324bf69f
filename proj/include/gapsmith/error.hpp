#pragma once

#include <stdexcept>
#include <string>

namespace gapsmith {

enum class ErrorKind {
    MalformedRational,
    MalformedComponent,
    EmptySet,
    OutOfDomain,
    DomainMismatch,
    NotAsymmetric,
    NotASemiorder,
    SynthesisFailed,
    TooLarge,
    GapTooLong,
    NotBad,
    NoSuchGap,
    MassExceedsOne,
    DegenerateDistance,
    InvalidArgument,
    StructureViolated,
    CertificateFailed,
    ParseError,
    UsageError,
    IoError,
};

const char* to_string(ErrorKind kind);

/// Single exception type for the library; `kind()` carries the failure class.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace gapsmith
