#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gdyn {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A minimal-open family that is not the base of a topology, or a bad
/// point reference inside a space description.
class TopologyError : public Error {
 public:
  using Error::Error;
};

/// Multiplication table violates closure, identity, associativity or inverses.
class GroupError : public Error {
 public:
  using Error::Error;
};

/// Action table violates the action laws or some T_g is not a homeomorphism.
class ActionError : public Error {
 public:
  using Error::Error;
};

class ContinuityError : public Error {
 public:
  ContinuityError(const std::string& msg, std::size_t point)
      : Error(msg), point_(point) {}
  std::size_t point() const { return point_; }

 private:
  std::size_t point_;
};

/// An operation was called outside the hypotheses it needs.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A construction would exceed a configured size bound.
class BoundError : public Error {
 public:
  using Error::Error;
};

/// Malformed miner target expression.
class ExpressionError : public Error {
 public:
  using Error::Error;
};

/// The random generator ran out of its rejection budget.
class GenerationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& msg)
      : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace gdyn
