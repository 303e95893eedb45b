#pragma once

#include <stdexcept>
#include <string>

namespace latfree {

/// Input has fewer than three distinct, non-collinear points.
class DegenerateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A constructor or routine was called outside its parameter domain.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// No lattice-free copy exists (scaling center too close to a lattice point).
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polygon text; message carries the offending field or line.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace latfree
