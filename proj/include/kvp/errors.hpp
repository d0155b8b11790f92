#pragma once

#include <stdexcept>
#include <string>

namespace kvp {

/// Arguments of incompatible shape (vector lengths, dimensions).
class MalformedInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A request whose enumeration or system size exceeds the configured guard.
class SizeGuardError : public std::length_error {
public:
    using std::length_error::length_error;
};

class SingularMatrix : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

} // namespace kvp
