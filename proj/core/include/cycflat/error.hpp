#pragma once

#include <stdexcept>
#include <string>

namespace cycflat {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ParseErrorKind { Empty, Ragged, NonBinary, TooWide, Malformed };

class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, int line, const std::string& what)
      : Error(what), kind_(kind), line_(line) {}
  ParseErrorKind kind() const { return kind_; }
  // 1-based line number, 0 when not tied to a line.
  int line() const { return line_; }

 private:
  ParseErrorKind kind_;
  int line_;
};

// An operation was called outside its domain (wrong rank, dependent set, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A size or enumeration guard was hit.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

// A checked mathematical property failed. Seeing one means either bad input
// to a routine that trusts its preconditions, or a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace cycflat
