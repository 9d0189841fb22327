#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace msca {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An action vector that is neither a request, an offer, nor a match.
struct InvalidActionError : Error {
    using Error::Error;
};

// A structurally broken automaton; carries one message per violation.
struct ValidationError : Error {
    explicit ValidationError(std::vector<std::string> violations);
    std::vector<std::string> violations;
};

struct EmptyOperandListError : Error {
    using Error::Error;
};

struct MixedFlavorError : Error {
    using Error::Error;
};

struct FlavorMismatchError : Error {
    using Error::Error;
};

struct RankMismatchError : Error {
    using Error::Error;
};

// Malformed JSON or a document that does not follow the automaton schema.
struct ParseError : Error {
    using Error::Error;
};

// A synthesis input broken before the fixed point even starts.
struct InvalidInputError : Error {
    using Error::Error;
};

// The fixed-point engine did not stabilize within its iteration budget.
struct NonMonotonePredicateError : Error {
    using Error::Error;
};

// Guard for brute-force checks that only make sense on small instances.
struct TooLargeError : Error {
    using Error::Error;
};

} // namespace msca
