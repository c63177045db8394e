#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace stabkit {

/// Base class of every error the library raises on bad input.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Operands disagree on length, ambient dimension, or field modulus.
class MismatchError : public Error {
  public:
    using Error::Error;
};

/// A generator list spans a non-isotropic subspace. Carries a witness pair
/// whose symplectic form is nonzero: 0-based generator indices, or 1-based
/// line numbers when raised by the file parser.
class NotIsotropicError : public Error {
  public:
    NotIsotropicError(const std::string& what, std::size_t first, std::size_t second)
        : Error(what), first_(first), second_(second) {}
    std::size_t first() const { return first_; }
    std::size_t second() const { return second_; }

  private:
    std::size_t first_;
    std::size_t second_;
};

/// An enumeration budget ran out before producing an answer. Carries the
/// fact the search did prove: the distance exceeds lower_bound().
class ResourceLimitError : public Error {
  public:
    ResourceLimitError(const std::string& what, std::uint32_t lower_bound)
        : Error(what), lower_bound_(lower_bound) {}
    std::uint32_t lower_bound() const { return lower_bound_; }

  private:
    std::uint32_t lower_bound_;
};

/// The vector handed to clean() is not in S^perp.
class NotLogicalError : public Error {
  public:
    using Error::Error;
};

/// No stabilizer element matches the logical on the region to clean.
/// Cannot occur when the region is a correctable erasure.
class NotCleanableError : public Error {
  public:
    using Error::Error;
};

/// The two regions handed to check_two_disjoint overlap.
class DisjointnessError : public Error {
  public:
    using Error::Error;
};

/// Requested logical count k outside [0, n].
class InvalidKError : public Error {
  public:
    using Error::Error;
};

/// Catalog lookup with a name the catalog does not know.
class UnknownCodeError : public Error {
  public:
    using Error::Error;
};

/// A subset sweep was requested above the configured subset cap.
class CapExceededError : public Error {
  public:
    using Error::Error;
};

/// A 1-based qudit index outside [1, n].
class IndexOutOfRangeError : public Error {
  public:
    using Error::Error;
};

/// Malformed text input; line and column are 1-based.
class ParseError : public Error {
  public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error(what), line_(line), column_(column) {}
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

  private:
    std::size_t line_;
    std::size_t column_;
};

/// A generator or vector line with the wrong number of entries.
class WrongLengthError : public ParseError {
  public:
    using ParseError::ParseError;
};

/// Pauli-letter input is only defined for p = 2.
class LetterRequiresP2Error : public ParseError {
  public:
    using ParseError::ParseError;
};

/// A structural invariant the library maintains was observed broken.
class InternalError : public std::logic_error {
  public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace stabkit
