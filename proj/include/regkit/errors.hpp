#pragma once

#include <stdexcept>
#include <string>

namespace regkit {

// Bad arguments or violated preconditions: non-positive eps, sets that do not
// partition the ground set, malformed construction parameters, and so on.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// An instance exceeds a configured enumeration ceiling. Separate from
// DomainError so callers can distinguish "too big to decide exactly" from
// "ill-posed".
class CapError : public DomainError {
public:
    explicit CapError(const std::string& msg) : DomainError(msg) {}
};

// File-level failures: unreadable paths, unwritable targets, malformed
// on-disk formats.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace regkit
