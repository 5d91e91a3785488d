#pragma once

#include <stdexcept>
#include <string>

namespace thetaq {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Division by an exact zero (field element or series).
struct DivisionByZero : Error {
    using Error::Error;
};

// Argument outside the mathematical domain (Im tau <= 0, order 0, ...).
struct DomainError : Error {
    using Error::Error;
};

// Query beyond a series' guaranteed truncation window.
struct WindowError : Error {
    using Error::Error;
};

struct ParseError : Error {
    std::size_t position;
    ParseError(std::string msg, std::size_t pos)
        : Error(std::move(msg) + " (at column " + std::to_string(pos + 1) + ")"), position(pos) {}
};

} // namespace thetaq
