#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace signalga {

/// Base for every error raised by the library. The CLI maps subclasses onto
/// exit codes: IoError -> 2, everything else -> 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class EmptyProgram : public Error {
public:
    EmptyProgram() : Error("signal program has no phases") {}
};

class InvalidProgram : public Error {
public:
    using Error::Error;
};

class InvalidScenario : public Error {
public:
    using Error::Error;
};

class InvalidTemplate : public Error {
public:
    using Error::Error;
};

class ShapeMismatch : public Error {
public:
    using Error::Error;
};

class IrreparableGenome : public Error {
public:
    using Error::Error;
};

class Unevaluated : public Error {
public:
    Unevaluated() : Error("populace member has not been evaluated") {}
};

class ZeroBaseline : public Error {
public:
    ZeroBaseline() : Error("baseline makespan is zero; improvement percentage undefined") {}
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

    /// 1-based source line, 0 when the input is not line-oriented.
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class ValidationError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace signalga
