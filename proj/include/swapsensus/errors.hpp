#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace swapsensus {

/// Base class for every recoverable error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Raised while building an Instance from text or from words.
class InstanceError : public Error
{
public:
    enum class Kind { empty_instance, unequal_lengths, invalid_symbol };

    /// `line` is 1-based; 0 means the error is not tied to a line.
    InstanceError(Kind kind, std::size_t line, const std::string& what)
      : Error(what), _kind(kind), _line(line)
    {
    }

    Kind kind() const noexcept { return _kind; }
    std::size_t line() const noexcept { return _line; }

private:
    Kind _kind;
    std::size_t _line;
};

class LengthMismatch : public Error
{
public:
    using Error::Error;
};

/// The instance already uses a symbol that a gadget reserves for itself.
class ReservedSymbolPresent : public Error
{
public:
    using Error::Error;
};

class CapExceeded : public Error
{
public:
    using Error::Error;
};

class OutOfRange : public Error
{
public:
    using Error::Error;
};

class PrerequisiteNotMatching : public Error
{
public:
    using Error::Error;
};

/// A witness failed its from-scratch distance check. Always a bug.
class CertificationFailure : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

} // namespace swapsensus
