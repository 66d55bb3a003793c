#ifndef COSPEC_ERRORS_HPP
#define COSPEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cospec {

/// Invalid construction parameters (bad family arguments, out-of-range vertices).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An input exceeds a hard size cap of an exhaustive routine.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph6 text.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A block that must be inverted is singular.
class SingularMatrix : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A polynomial that cannot be the characteristic polynomial of a simple graph.
class NotGraphPolynomial : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cospec

#endif  // COSPEC_ERRORS_HPP
