#pragma once

#include <stdexcept>

namespace dupcode {

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Two values over different alphabets were combined.
class AlphabetMismatch : public Error {
public:
    using Error::Error;
};

// A stated precondition does not hold (bad position, bad length, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

// A deduplication scan found no window satisfying the match condition.
class NoMatch : public Error {
public:
    using Error::Error;
};

// The input is outside the operation's domain (e.g. xi on a root).
class IllegalInput : public Error {
public:
    using Error::Error;
};

// A recovered index field is out of range.
class CorruptIndex : public Error {
public:
    using Error::Error;
};

// A recovered numeric field is out of range.
class CorruptField : public Error {
public:
    using Error::Error;
};

// No candidate consistent with a digest exists; the channel precondition
// was violated.
class DecodeFail : public Error {
public:
    using Error::Error;
};

// Two distinct candidates matched; must not happen under valid inputs.
class AmbiguousDecode : public Error {
public:
    using Error::Error;
};

// The received word is longer than the layout admits.
class TooManyErrors : public Error {
public:
    using Error::Error;
};

// An enumeration exceeded its configured budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

// A value would not fit the fixed-width integer carrying it.
class Overflow : public Error {
public:
    using Error::Error;
};

}  // namespace dupcode
