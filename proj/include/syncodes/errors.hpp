#pragma once

#include <stdexcept>
#include <string>

namespace syncodes {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Caller passed arguments outside an operation's preconditions.
class InvalidInput : public Error {
public:
    using Error::Error;
};

// The received word is not consistent with any admissible input.
class Undecodable : public Error {
public:
    using Error::Error;
};

// An internal guarantee failed (for example two candidates share a syndrome).
class InvariantViolation : public Error {
public:
    using Error::Error;
};

// A randomized family produced no witness; regenerate with another seed.
class FamilyFailure : public Error {
public:
    using Error::Error;
};

// An exhaustive enumeration would exceed its configured budget.
class SizeError : public Error {
public:
    using Error::Error;
};

}  // namespace syncodes
