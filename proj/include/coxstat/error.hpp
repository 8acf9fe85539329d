#pragma once

#include <stdexcept>
#include <string>

namespace coxstat {

/// Raised when an input lies outside the domain of an operation: a word that is
/// not a permutation, a code entry out of range, a degree mismatch, an element
/// of B_n passed where D_n is required.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a request is well-formed but larger than the enumeration core
/// is willing to handle.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace coxstat
