#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace bockstein {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Undefined extended-integer arithmetic ((+inf)+(-inf), inf-inf) or overflow.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

/// A coefficient group that must be nonzero was the trivial group.
class TrivialGroupError : public Error {
 public:
  TrivialGroupError() : Error("trivial group: a nonzero abelian group is required") {}
};

/// A triple (S, D; d) that violates D ⊆ S or d(P \ S) = d(0).
class InvalidTripleError : public Error {
 public:
  using Error::Error;
};

/// A Bockstein function that violates one of BI1..BI6.
class InvalidPhiError : public Error {
 public:
  explicit InvalidPhiError(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  std::vector<std::string> violations_;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A construction exceeded its size guard.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

/// Syntax or semantic error in the expression language, with byte offset.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A domain error raised while evaluating an expression node.
class EvalError : public Error {
 public:
  EvalError(std::size_t position, const std::string& message);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace bockstein
