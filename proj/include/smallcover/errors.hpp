#pragma once

#include <stdexcept>
#include <string>

namespace smallcover {

/// Malformed or semantically invalid input (CLI exit code 1).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A checked mathematical property failed on valid input (CLI exit code 2).
class PropertyViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Internal cross-checks disagree: a hypothesis was violated or there is a bug
/// (CLI exit code 3).
class InternalConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace smallcover
