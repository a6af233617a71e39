#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace rankone {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846264338327950288;

/// Malformed input: dimension mismatch, unparsable data, inconsistent tags.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Evaluation at a pole of the function.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Parameter range the library deliberately does not support numerically.
class UnsupportedRangeError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace rankone
