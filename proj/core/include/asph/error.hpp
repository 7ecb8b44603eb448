#pragma once

#include <stdexcept>
#include <string>

namespace asph {

/// Raised when caller input violates an operation's precondition
/// (wrong determinant, malformed text, unmatched monodromy product, ...).
class InvalidInput : public std::invalid_argument {
public:
    explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when an internal cross-check fails. Seeing one of these means a
/// formula or algorithm produced a value that its own certificate rejects.
class ConsistencyError : public std::logic_error {
public:
    explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

/// Raised by the assembly engine when a gluing is refused.
class GluingError : public std::runtime_error {
public:
    explicit GluingError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace asph
