#pragma once

#include <stdexcept>
#include <string>

namespace symsax {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A numeric parameter (alphabet size, word length, grid value) is out of range.
class InvalidParameter : public Error {
public:
    using Error::Error;
};

// Input data violates an operation's precondition (non-finite value,
// length mismatch, empty training set).
class InvalidInput : public Error {
public:
    using Error::Error;
};

// Two symbolic words (or a word and a distance context) cannot be compared.
class IncompatibleWords : public InvalidInput {
public:
    IncompatibleWords(std::string field, const std::string& what)
        : InvalidInput(what), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

class IncompatibleSeries : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class IoError : public Error {
public:
    using Error::Error;
};

class NotFound : public Error {
public:
    using Error::Error;
};

// Malformed dataset or report file. line/column are 1-based, 0 when unknown.
class FormatError : public Error {
public:
    FormatError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
        : Error(what), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace symsax
