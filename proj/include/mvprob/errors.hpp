#pragma once

#include <stdexcept>
#include <string>

namespace mvprob {

// Base class for every error raised by the library on bad input.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
public:
  using Error::Error;
};

class UnboundedPolytope : public Error {
public:
  using Error::Error;
};

class OutsideHull : public Error {
public:
  using Error::Error;
};

class DegenerateVertices : public Error {
public:
  using Error::Error;
};

class AlgebraMismatch : public Error {
public:
  using Error::Error;
};

class UnsupportedAlgebra : public Error {
public:
  using Error::Error;
};

class AxiomViolation : public Error {
public:
  using Error::Error;
};

class RangeError : public Error {
public:
  using Error::Error;
};

class NotAnIdeal : public Error {
public:
  using Error::Error;
};

class NotAProbabilityMap : public Error {
public:
  using Error::Error;
};

class NotStochastic : public Error {
public:
  using Error::Error;
};

class NotRepresentable : public Error {
public:
  using Error::Error;
};

class InfeasibleDecomposition : public Error {
public:
  using Error::Error;
};

class BudgetExceeded : public Error {
public:
  using Error::Error;
};

class UnboundVariable : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  ParseError(std::size_t position, const std::string& message)
      : Error("parse error at offset " + std::to_string(position) + ": " +
              message),
        position_(position), message_(message) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& message() const noexcept { return message_; }

private:
  std::size_t position_;
  std::string message_;
};

// Raised when two independent computations of the same fact disagree. This
// indicates a defect in the library, never bad input.
class InternalInconsistency : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace mvprob
