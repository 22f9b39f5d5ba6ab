#pragma once

#include <stdexcept>
#include <string>

namespace weeklab {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text (CSV rows, JSON documents).
class ParseError : public Error {
public:
    using Error::Error;
};

// Structurally valid input that violates a domain invariant
// (high < low, duplicate dates, misaligned vectors).
class ValidationError : public Error {
public:
    using Error::Error;
};

// Series too short for the requested computation.
class InsufficientDataError : public Error {
public:
    using Error::Error;
};

// Numeric arguments outside the defined domain (non-positive price,
// division by a zero mean, non-finite feature).
class DomainError : public Error {
public:
    using Error::Error;
};

// Training data a model cannot be fitted on (single-class labels).
class DegenerateDataError : public Error {
public:
    using Error::Error;
};

// Transport-level failure when talking to a remote provider. Body format
// problems surface as ParseError/ValidationError instead.
class FetchError : public Error {
public:
    using Error::Error;
};

// Bad run configuration (missing keys, out-of-range values).
class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace weeklab
