#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sesforge {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed IRI, literal, or triple.
class TermError : public Error {
public:
    using Error::Error;
};

// Curie with a prefix that is not registered.
class PrefixError : public Error {
public:
    explicit PrefixError(std::string prefix)
        : Error("unknown prefix '" + prefix + "'"), prefix_(std::move(prefix)) {}

    const std::string& prefix() const noexcept { return prefix_; }

private:
    std::string prefix_;
};

// Syntax error in a concrete document. line() is 1-based; 0 means "no position".
class ParseError : public Error {
public:
    ParseError(std::string message, std::size_t line)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
          message_(std::move(message)),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }
    const std::string& message() const noexcept { return message_; }

private:
    std::string message_;
    std::size_t line_;
};

// Input graph cannot be normalized (no template role, IRI collisions, bad links).
class NormalizeError : public Error {
public:
    using Error::Error;
};

} // namespace sesforge
