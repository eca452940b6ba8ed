#pragma once

#include <stdexcept>
#include <string>

namespace radiolab {

/// Raised when caller-supplied data violates an operation's preconditions
/// (bad parameters, malformed files, partial labelings, ...).
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when an ordering cannot be turned into a labeling under the
/// requested center (a non-positive canonical increment).
class IncompatibleOrdering : public std::runtime_error {
public:
    explicit IncompatibleOrdering(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace radiolab
