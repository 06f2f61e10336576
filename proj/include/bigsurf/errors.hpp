#pragma once

#include <stdexcept>
#include <string>

namespace bigsurf {

// Bad input: malformed parameters, violated preconditions, non-definite forms
// handed to routines that need definiteness. Maps to CLI exit status 1.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An internal consistency check failed (e.g. two independent routes disagree).
// Maps to CLI exit status 2.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace bigsurf
