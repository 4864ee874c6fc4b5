#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace linoep {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two vectors of different dimensions were combined, or a set mixes dimensions.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// An operation that needs at least one vector received an empty set.
class EmptySet : public Error {
public:
    using Error::Error;
};

/// A vector carries a NaN or infinite entry.
class InvalidVector : public Error {
public:
    using Error::Error;
};

/// The input set is numerically rank deficient at the requested tolerance.
class NotLinearlyIndependent : public Error {
public:
    using Error::Error;
};

/// A projection denominator (tail sum) collapsed below the tolerance floor.
class DegenerateTailSum : public Error {
public:
    using Error::Error;
};

/// Exhaustive permutation enumeration was requested for a set that is too large.
class TooManyPermutations : public Error {
public:
    using Error::Error;
};

/// A seeded example generator exhausted its retry budget.
class GenerationFailed : public Error {
public:
    using Error::Error;
};

/// A file could not be opened or written.
class FileError : public Error {
public:
    using Error::Error;
};

/// Malformed input text. Carries a 1-based line/column position.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : Error(message + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace linoep
