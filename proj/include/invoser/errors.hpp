#pragma once

#include <stdexcept>
#include <string>

namespace invoser {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

// Evaluation at a pole: args[0] == 0 while X1 appears with a negative exponent.
struct ZeroAtPole : Error {
    using Error::Error;
};

// Argument list too short to cover every variable in play.
struct ArityError : Error {
    using Error::Error;
};

// Substituting X1 would require inverting a non-monomial image.
struct NonInvertibleSubstitution : Error {
    using Error::Error;
};

struct RangeError : Error {
    using Error::Error;
};

// Binary series operation on series of different truncation orders.
struct OrderMismatch : Error {
    using Error::Error;
};

// Inner series of a composition has a nonzero constant term.
struct InnerConstantTerm : Error {
    using Error::Error;
};

// Series lacks a compositional inverse (constant term != 0 or linear term == 0).
struct NotInvertible : Error {
    using Error::Error;
};

struct InsufficientSeeds : Error {
    using Error::Error;
};

struct NotInvolution : Error {
    using Error::Error;
};

// The identity has no conjugate decomposition through the negated identity.
struct TrivialInvolution : Error {
    using Error::Error;
};

struct ZeroLeadingSeed : Error {
    using Error::Error;
};

// Expression parser error; carries the byte offset of the offending token.
struct SyntaxError : Error {
    SyntaxError(const std::string& what, std::size_t offset)
        : Error(what + " (at byte " + std::to_string(offset) + ")"), offset(offset) {}
    std::size_t offset;
};

// Series division where the divisor has a zero constant term.
struct DivisionByNonUnit : Error {
    using Error::Error;
};

// exp/sin/cos applied off the origin, or log outside the log(1+u) form.
struct TranscendentalAtNonzeroConstant : Error {
    using Error::Error;
};

struct JsonFormatError : Error {
    using Error::Error;
};

}  // namespace invoser
