#pragma once

#include <stdexcept>
#include <string>

namespace morrey {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mismatched dimensions or otherwise malformed arguments.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// An input lies outside the domain of the operation (zero element, p = q for a witness, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Integer overflow while computing a size (cardinalities, witness indices).
class SizeError : public Error {
 public:
  using Error::Error;
};

/// The requested computation does not fit the configured memory budget.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// A check in the theorem verification failed; carries the offending quantity.
class VerificationError : public Error {
 public:
  VerificationError(std::string quantity, double value, const std::string& what)
      : Error(what), quantity_(std::move(quantity)), value_(value) {}

  const std::string& quantity() const noexcept { return quantity_; }
  double value() const noexcept { return value_; }

 private:
  std::string quantity_;
  double value_;
};

/// Malformed sequence file. The message is prefixed with "line <n>: " when a line is at fault.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace morrey
