#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qudit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Dimension n < 2, or a spin with 2J not a positive integer.
class InvalidDimension : public Error {
 public:
  using Error::Error;
};

// Two objects that must share a dimension do not.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Matrix input that is not square or not Hermitian.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// A probability component left [0,1].
class PositivityError : public Error {
 public:
  PositivityError(std::size_t component, double value)
      : Error("component p" + std::to_string(component + 1) + " = " +
              std::to_string(value) + " lies outside [0,1]"),
        component_(component),
        value_(value) {}

  // Zero-based index of the offending component.
  std::size_t component() const noexcept { return component_; }
  double value() const noexcept { return value_; }

 private:
  std::size_t component_;
  double value_;
};

}  // namespace qudit
