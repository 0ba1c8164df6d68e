#pragma once

#include <stdexcept>
#include <string>

namespace smale {

// Base class for all library failures that callers may want to catch
// as a group.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A multi-index whose total degree does not match the block degree.
class DegreeMismatchError : public Error {
 public:
  using Error::Error;
};

// Two systems with different degree patterns where equal ones are required.
class PatternMismatchError : public Error {
 public:
  using Error::Error;
};

// The restricted Jacobian is rank deficient at the evaluation point.
class SingularJacobianError : public Error {
 public:
  using Error::Error;
};

// Homotopy endpoints are (anti)parallel or the angle is outside (0, pi).
class DegeneratePencilError : public Error {
 public:
  using Error::Error;
};

// An argument violates a documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Degree patterns with max degree 1; solvable by plain linear algebra and
// rejected by the solver layer.
class UnsupportedDegreeError : public Error {
 public:
  using Error::Error;
};

}  // namespace smale
