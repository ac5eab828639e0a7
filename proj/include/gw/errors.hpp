#pragma once

#include <stdexcept>

namespace gw {

// Base class for all library errors.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed word, partition, or rational text.
struct parse_error : error {
  using error::error;
};

// The word does not converge to a nonzero constant as x grows.
struct not_in_h : error {
  using error::error;
};

// Argument outside the documented domain, or a resource guard tripped.
struct out_of_range_error : error {
  using error::error;
};

// Exponent map violates the p-divides-exponent-of-p constraint.
struct invalid_pp_element : error {
  using error::error;
};

// (lambda; mu) fails one of the three solution conditions.
struct invalid_solution : error {
  using error::error;
};

// A bounded search hit its node budget before reaching a verdict.
struct budget_exhausted : error {
  using error::error;
};

}  // namespace gw
