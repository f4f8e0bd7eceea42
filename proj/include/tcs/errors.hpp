#pragma once

// Error taxonomy shared by all modules. Every domain violation derives from
// DomainError so the CLI can map the whole family to exit code 2.

#include <stdexcept>
#include <string>

namespace tcs {

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct OutOfDomain : DomainError {
    using DomainError::DomainError;
};

struct NotAdjacent : DomainError {
    using DomainError::DomainError;
};

struct DegenerateArc : DomainError {
    using DomainError::DomainError;
};

struct DegenerateInput : DomainError {
    using DomainError::DomainError;
};

struct InfiniteInput : DomainError {
    using DomainError::DomainError;
};

struct MalformedTerms : DomainError {
    using DomainError::DomainError;
};

struct ZeroCoefficient : DomainError {
    using DomainError::DomainError;
};

struct Overtwisted : DomainError {
    using DomainError::DomainError;
};

struct UnknownSymbol : DomainError {
    using DomainError::DomainError;
};

struct ParseError : DomainError {
    using DomainError::DomainError;
};

} // namespace tcs
