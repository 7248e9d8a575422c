#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bhdimer {

// Base of every error raised by the library. The CLI maps any of these to a
// nonzero exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParams : public Error {
 public:
  using Error::Error;
};

class InvalidState : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

class ZeroCoupling : public Error {
 public:
  ZeroCoupling() : Error("coupling u is zero: no collapse/revival structure") {}
};

class DegenerateShift : public Error {
 public:
  using Error::Error;
};

class InsufficientDecay : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class ConvergenceFailure : public Error {
 public:
  ConvergenceFailure(std::size_t index, int iterations)
      : Error("tridiagonal QL failed to converge for eigenvalue " + std::to_string(index) +
              " after " + std::to_string(iterations) + " iterations"),
        index_(index) {}

  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

}  // namespace bhdimer
