#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ix {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Operands live on different state spaces, or a relation's domain/codomain
/// does not chain.
class SpaceMismatch : public Error {
public:
  using Error::Error;
};

/// An enumerated construction (dual, seq, intersection, localize) would
/// produce more commands or states than the configured cap.
class SizeCapExceeded : public Error {
public:
  using Error::Error;
};

class NotHomogeneous : public Error {
public:
  using Error::Error;
};

class InvalidPreorder : public Error {
public:
  using Error::Error;
};

class InvalidStructure : public Error {
public:
  using Error::Error;
};

class MalformedProgram : public Error {
public:
  using Error::Error;
};

/// Raised by client synthesis when the start state is outside the cover.
class NotCovered : public Error {
public:
  NotCovered(std::size_t state, const std::string& what)
      : Error(what), state_(state) {}
  std::size_t state() const noexcept { return state_; }

private:
  std::size_t state_;
};

/// A runtime precondition of execution failed: a start state outside the
/// server invariant, a gap in a choice table, or an exit that breaks the
/// simulation relation.
class ContractViolation : public Error {
public:
  using Error::Error;
};

class MissingWitness : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  ParseError(std::size_t line, std::size_t column, const std::string& msg)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace ix
