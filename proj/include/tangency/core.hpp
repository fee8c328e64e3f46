#pragma once

// Shared scalar types and error classes.

#include <boost/multiprecision/cpp_int.hpp>

#include <limits>
#include <stdexcept>
#include <string>

namespace tangency {

/// Exact integer used for every divisor-class and dimension computation.
using Integer = boost::multiprecision::cpp_int;

/// A parameter lies outside the range in which a result is known to hold.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Two objects that must live on the same surface model do not.
class ModelMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal consistency check failed; the result would be unjustified.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline long long to_int64(const Integer& v) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
    throw RangeError("integer does not fit in 64 bits: " + v.str());
  return v.convert_to<long long>();
}

}  // namespace tangency
