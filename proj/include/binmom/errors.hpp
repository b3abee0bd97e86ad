#pragma once

#include <stdexcept>
#include <string>

namespace binmom {

/// Raised by exact polynomial division when the divisor does not divide.
class DivisibilityError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised when a polynomial expected to be (anti-)symmetric in p and q is not.
class AsymmetryError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An internal post-condition failed; always indicates a bug.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace binmom
