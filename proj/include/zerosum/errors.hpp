#pragma once

#include <stdexcept>
#include <string>

namespace zerosum {

/// Base of every error raised by the library. The CLI maps subclasses onto
/// process exit codes via exit_code().
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual int exit_code() const noexcept { return 1; }
};

// Validation and coverage failures (exit code 1).
class DomainError : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

class CoverageError : public Error {
 public:
  using Error::Error;
};

class InputError : public Error {
 public:
  using Error::Error;
};

class HypothesisError : public Error {
 public:
  using Error::Error;
};

class ResourceError : public Error {
 public:
  using Error::Error;
};

class PoleError : public Error {
 public:
  using Error::Error;
};

/// Raised when an evaluation point is closer than the configured stand-off to
/// a pole of the function being evaluated.
class PoleProximityError : public Error {
 public:
  PoleProximityError(const std::string& what, double distance)
      : Error(what), distance_(distance) {}
  double distance() const noexcept { return distance_; }

 private:
  double distance_;
};

/// A zero table file (text or binary cache) is malformed. line() is 0 when the
/// failure is not tied to a text line.
class FormatError : public Error {
 public:
  FormatError(const std::string& what, std::size_t line = 0)
      : Error(what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class EmptyTableError : public FormatError {
 public:
  using FormatError::FormatError;
};

/// The zero scan missed sign changes somewhere in [lo, hi].
class CompletenessError : public Error {
 public:
  CompletenessError(const std::string& what, double lo, double hi)
      : Error(what), lo_(lo), hi_(hi) {}
  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }

 private:
  double lo_, hi_;
};

class IoError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 2; }
};

/// Two independent evaluation routes disagree beyond their tolerance.
class ConsistencyError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 3; }
};

}  // namespace zerosum
