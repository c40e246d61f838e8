#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace lejalab {

using Complex = std::complex<double>;

/// Raised when an input violates an operation's contract: malformed set
/// descriptions, points off the compact set, duplicate nodes, and so on.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a numerical procedure cannot produce a usable answer for
/// otherwise valid input (e.g. a level curve leaves the sampling box).
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lejalab
