#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bnlat {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Checked integer arithmetic left the 64-bit range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Two vectors, or a vector and a lattice, live over different bases.
class BasisMismatch : public Error {
 public:
  BasisMismatch(std::string lhs, std::string rhs)
      : Error("basis mismatch: '" + lhs + "' vs '" + rhs + "'"),
        lhs_(std::move(lhs)),
        rhs_(std::move(rhs)) {}

  const std::string& lhs() const noexcept { return lhs_; }
  const std::string& rhs() const noexcept { return rhs_; }

 private:
  std::string lhs_;
  std::string rhs_;
};

/// An argument is outside the domain of an operation (bad index, wrong size,
/// non-half-integral value, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An operation's precondition on its mathematical input does not hold,
/// e.g. a search target that is not a polarization-type class.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A structure failed its self-verification while being built.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// Malformed class expression or number, with the 0-based column of the
/// offending character.
class ParseError : public Error {
 public:
  ParseError(std::string input, std::size_t position, const std::string& what)
      : Error(what + " at position " + std::to_string(position)),
        input_(std::move(input)),
        position_(position),
        reason_(what) {}

  const std::string& input() const noexcept { return input_; }
  std::size_t position() const noexcept { return position_; }
  const std::string& reason() const noexcept { return reason_; }

  /// The input followed by a caret line pointing at the error.
  std::string annotated() const {
    return input_ + "\n" + std::string(position_, ' ') + "^ " + reason_;
  }

 private:
  std::string input_;
  std::size_t position_;
  std::string reason_;
};

}  // namespace bnlat
