#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace matnum {

/// Exact signed integer of unbounded magnitude.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

/// Raised when an argument violates an operation's precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a constructed object fails its own certification check.
/// Seeing one of these is always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised when a request would exceed the enumeration or memory budget.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string to_string(const Int& value) { return value.str(); }

/// floor(sqrt(n)) for n >= 0.
Int isqrt(const Int& n);

/// Floor division for a signed numerator and a positive denominator.
Int floor_div(const Int& num, const Int& den);

inline bool is_even(const Int& v) { return v % 2 == 0; }
inline bool is_odd(const Int& v) { return !is_even(v); }

/// Narrows to int64, throwing ResourceLimit with `what` when out of range.
std::int64_t to_int64(const Int& v, const char* what);

}  // namespace matnum
