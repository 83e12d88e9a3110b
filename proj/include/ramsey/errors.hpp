#pragma once

#include <stdexcept>
#include <string>

namespace ramsey {

// Base of every error thrown by the library. The CLI maps the two families
// below onto its exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad input: malformed files, out-of-range parameters, violated
// preconditions.
class InputError : public Error {
 public:
  using Error::Error;
};

// Internal consistency failures, e.g. two exact values disagreeing.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

class MalformedInput : public InputError {
 public:
  using InputError::InputError;
};

class OrderTooLarge : public InputError {
 public:
  using InputError::InputError;
};

class PatternTooLarge : public InputError {
 public:
  using InputError::InputError;
};

class NotTriangleFree : public InputError {
 public:
  using InputError::InputError;
};

class UnsupportedPattern : public InputError {
 public:
  using InputError::InputError;
};

class MissingTableEntry : public InputError {
 public:
  MissingTableEntry(int pattern_size, int order)
      : InputError("no e-table entry for pattern size " +
                   std::to_string(pattern_size) + ", order " +
                   std::to_string(order)),
        pattern_size_(pattern_size),
        order_(order) {}

  int pattern_size() const { return pattern_size_; }
  int order() const { return order_; }

 private:
  int pattern_size_;
  int order_;
};

class MissingCensus : public InputError {
 public:
  using InputError::InputError;
};

class ExactConflict : public ConsistencyError {
 public:
  using ConsistencyError::ConsistencyError;
};

}  // namespace ramsey
