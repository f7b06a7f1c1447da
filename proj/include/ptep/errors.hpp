#pragma once

#include <stdexcept>
#include <string>

namespace ptep {

/// Argument outside the mathematical domain of an operation (p < 2, mismatched rings, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// User-supplied data violates a structural requirement, e.g. a coefficient vector that does not sum to zero.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An enumeration would exceed the configured term budget.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact division left a nonzero remainder. The typed remainder lives in NotDivisible<R>.
class NotDivisibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace ptep
