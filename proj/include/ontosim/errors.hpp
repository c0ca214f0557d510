#pragma once

#include <stdexcept>
#include <string>

namespace ontosim {

// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& message) : std::runtime_error(message) {}
};

// Malformed input data: listings, embedding files, interaction records.
class ParseError : public Error {
public:
    using Error::Error;
};

// Filesystem-level failures: unreadable paths, unwritable logs.
class IoError : public Error {
public:
    using Error::Error;
};

// Violated model preconditions: empty corpora, arity mismatches, bad weights.
class ModelError : public Error {
public:
    using Error::Error;
};

// Bad command-line or config-file usage.
class UsageError : public Error {
public:
    using Error::Error;
};

}  // namespace ontosim
