#pragma once

#include <stdexcept>
#include <string>

namespace nuclab {

// Input outside an operation's mathematical domain (m <= 0, v < 0, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A numerical procedure failed to reach its tolerance or produced non-finite values.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The potential does not have two distinct minima in the searched range.
class NoFalseVacuumError : public NumericError {
public:
    using NumericError::NumericError;
};

// Caller broke a documented precondition on a constructed object.
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Rejected run configuration (maps to CLI exit status 2).
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace nuclab
