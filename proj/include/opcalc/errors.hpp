#pragma once

#include <stdexcept>
#include <string>

namespace opcalc {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input files or inconsistent user-supplied data.
struct InputError : Error {
    explicit InputError(const std::string& msg) : Error(msg) {}
};

// API misuse: mixed fields, arity mismatches, bad indices.
struct UsageError : Error {
    explicit UsageError(const std::string& msg) : Error(msg) {}
};

// Division by zero and friends.
struct ArithmeticError : Error {
    explicit ArithmeticError(const std::string& msg) : Error(msg) {}
};

// An operation would leave the materialized degree range.
struct CapacityError : Error {
    explicit CapacityError(const std::string& msg) : Error(msg) {}
};

}  // namespace opcalc
