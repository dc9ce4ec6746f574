#pragma once

#include <stdexcept>
#include <string>

namespace cdock {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed instance or schedule text. line() is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line)
      : Error(line > 0 ? message + ", line " + std::to_string(line) : message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// A documented precondition of an algorithm does not hold for its input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// PD2 and lemma1_bound only accept instances where every A has out-degree 2.
class NotD2Error : public PreconditionError {
 public:
  NotD2Error(int a_index, int out_degree)
      : PreconditionError("instance is not in class D2: A" +
                          std::to_string(a_index + 1) + " has out-degree " +
                          std::to_string(out_degree)),
        a_index_(a_index),
        out_degree_(out_degree) {}

  // 0-based index of the first offending machine-1 operation.
  int a_index() const { return a_index_; }
  int out_degree() const { return out_degree_; }

 private:
  int a_index_;
  int out_degree_;
};

// Enumeration-based solvers refuse inputs beyond their configured size limit.
class SizeLimitError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

}  // namespace cdock
