/**
 * @file error.hpp
 * @brief Exception types shared across the library.
 */
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ringshift {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands differ in width or height.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// Operands live in different residue rings (modulus mismatch).
class ModulusError : public Error {
public:
    using Error::Error;
};

/// An argument value is outside its permitted domain.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A pixel or sample value does not fit the modulus / maxval it was declared with.
class PixelRangeError : public Error {
public:
    using Error::Error;
};

/// Malformed file magic or header; carries the offending byte offset.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t byte_offset)
        : Error(message + " (byte " + std::to_string(byte_offset) + ")"),
          byte_offset_(byte_offset) {}

    std::size_t byte_offset() const noexcept { return byte_offset_; }

private:
    std::size_t byte_offset_;
};

/// Pixel payload ends before the declared sample count.
class TruncatedError : public Error {
public:
    using Error::Error;
};

/// Filesystem-level read or write failure.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace ringshift
