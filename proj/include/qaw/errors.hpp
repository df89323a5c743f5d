#ifndef QAW_ERRORS_HPP
#define QAW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qaw {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the admissible region of an operation.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A factor of the form (1 - abcd q^k) or similar vanished.
class DegenerateDenominator : public Error {
 public:
  using Error::Error;
};

/// An iterative procedure (series, quadrature) failed to meet its tolerance.
class ConvergenceFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace qaw

#endif  // QAW_ERRORS_HPP
