#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dirkit {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A container or vector does not have the cardinality its context requires.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A value is outside its admissible range or breaks an ordering invariant.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A representation was asked for a datatype it does not provide.
class UnsupportedDataType : public Error {
 public:
  using Error::Error;
};

/// Two reads that should address the same datapoints landed on different ones.
class CoordinateMismatch : public Error {
 public:
  using Error::Error;
};

/// Failure while numerically fitting a model.
class FitError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file. The message carries "<path>:<line>: ".
class ParseError : public Error {
 public:
  ParseError(const std::string& where, std::size_t line, const std::string& what)
      : Error(where + ":" + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// I/O failure unrelated to file contents (cannot open, short write).
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace dirkit
