#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace homcx {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input file or document.
struct InputError : Error {
    using Error::Error;
};

/// An operation was called outside its domain (empty simplex, k <= 0, ...).
struct DomainError : Error {
    using Error::Error;
};

/// An enumeration hit its element cap. Never silently truncated.
struct CapExceeded : Error {
    CapExceeded(const std::string& what, std::size_t partial)
        : Error(what + " (cap exceeded after " + std::to_string(partial) + " elements)"),
          partial_count(partial) {}
    std::size_t partial_count;
};

/// A constructive step produced something that fails its own postcondition.
struct InvariantViolation : Error {
    using Error::Error;
};

}  // namespace homcx
