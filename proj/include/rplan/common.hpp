#pragma once

#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace rplan {

inline constexpr const char* kVersion = "1.0.0";

// Arbitrary-precision integer / rational used for all exact counts.
using Int = mpz_class;
using Rat = mpq_class;

// Thrown when an input exceeds a documented brute-force / memory guard.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown by operations implemented only for a small range of dimensions.
class UnsupportedDimensionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rplan
