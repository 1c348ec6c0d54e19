#pragma once

#include <stdexcept>
#include <string>

namespace weylbrick {

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidDiagramError : DomainError {
    using DomainError::DomainError;
};

struct NonReducedWordError : DomainError {
    NonReducedWordError() : DomainError("word is not reduced") {}
    explicit NonReducedWordError(const std::string& msg) : DomainError(msg) {}
};

struct NotBruhatInversionError : DomainError {
    using DomainError::DomainError;
};

struct NotSortableError : DomainError {
    using DomainError::DomainError;
};

struct CapExceededError : DomainError {
    using DomainError::DomainError;
};

} // namespace weylbrick
