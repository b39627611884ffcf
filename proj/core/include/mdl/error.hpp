#pragma once

#include <stdexcept>
#include <string>

namespace mdl {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (missing edge, bad parameters...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Malformed textual input (graph6, edge lists, rationals, multigraph text).
class ParseError : public Error {
public:
    using Error::Error;
};

/// A computation was asked to run above its size guardrail.
class GuardrailExceeded : public Error {
public:
    using Error::Error;
};

/// A graph or count does not fit the fixed-size representation.
class SizeOverflow : public Error {
public:
    using Error::Error;
};

}  // namespace mdl
