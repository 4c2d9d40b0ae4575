#pragma once

#include <stdexcept>
#include <string>

namespace whitneyforms {

// Base of every error raised by the library. Callers that only care whether
// an operation succeeded can catch this.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input that cannot be interpreted (bad JSON, malformed rational, ...).
class ParseError : public Error {
public:
    using Error::Error;
};

class BadDegree : public Error {
public:
    using Error::Error;
};

class DegreeMismatch : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class DegreeOverflow : public Error {
public:
    using Error::Error;
};

class InvalidFace : public Error {
public:
    using Error::Error;
};

// Linear algebra failures.
class NoSolution : public Error {
public:
    using Error::Error;
};

class NotUnique : public Error {
public:
    using Error::Error;
};

// Theorem violations. These can only be raised by an implementation bug.
class TheoremViolation : public Error {
public:
    using Error::Error;
};

class NonUnique : public TheoremViolation {
public:
    using TheoremViolation::TheoremViolation;
};

class Inconsistent : public TheoremViolation {
public:
    using TheoremViolation::TheoremViolation;
};

class TraceIncomplete : public TheoremViolation {
public:
    using TheoremViolation::TheoremViolation;
};

} // namespace whitneyforms
